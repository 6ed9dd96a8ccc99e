//! Cyclic-by-row Jacobi eigensolver for dense symmetric matrices.

use crate::error::{Error, Result};

use super::matrix::SymMatrix;

/// Convergence target for the off-diagonal Frobenius norm, relative to ‖M‖_F.
pub const RELATIVE_TOLERANCE: f64 = 1e-12;

/// Full sweeps attempted before giving up.
pub const MAX_SWEEPS: usize = 30;

#[derive(Clone, Debug, PartialEq)]
pub struct Eigen {
    /// Non-increasing.
    pub values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector of `values[k]`, its
    /// largest-magnitude entry made positive.
    pub vectors: Option<Vec<Vec<f64>>>,
    pub residual: f64,
    pub sweeps: usize,
}

/// Diagonalizes `m` by plane rotations, each annihilating one off-diagonal
/// pair, visiting pairs `(p, q)` row by row until the off-diagonal norm drops
/// below `RELATIVE_TOLERANCE · ‖M‖_F`.
pub fn sym_eigen(m: &SymMatrix, want_vectors: bool) -> Result<Eigen> {
    let n = m.n();
    let mut a = m.clone();
    let mut v = want_vectors.then(|| identity(n));
    let target = RELATIVE_TOLERANCE * m.frobenius_norm();

    let mut sweeps = 0;
    let mut residual = a.off_diagonal_norm();
    while residual > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NonConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, v.as_mut(), p, q);
            }
        }
        sweeps += 1;
        residual = a.off_diagonal_norm();
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(j, j).total_cmp(&a.get(i, i)));
    let values = order.iter().map(|&i| a.get(i, i)).collect();
    let vectors = v.map(|v| {
        order
            .iter()
            .map(|&k| {
                let mut col: Vec<f64> = (0..n).map(|i| v[i * n + k]).collect();
                let pivot =
                    col.iter().copied().fold(
                        0.0f64,
                        |best, x| if x.abs() > best.abs() { x } else { best },
                    );
                if pivot < 0.0 {
                    col.iter_mut().for_each(|x| *x = -*x);
                }
                col
            })
            .collect()
    });
    Ok(Eigen {
        values,
        vectors,
        residual,
        sweeps,
    })
}

fn identity(n: usize) -> Vec<f64> {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    v
}

fn rotate(a: &mut SymMatrix, v: Option<&mut Vec<f64>>, p: usize, q: usize) {
    let n = a.n();
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    let data = a.data_mut();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = data[k * n + p];
        let akq = data[k * n + q];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        data[k * n + p] = new_p;
        data[p * n + k] = new_p;
        data[k * n + q] = new_q;
        data[q * n + k] = new_q;
    }
    data[p * n + p] = app - t * apq;
    data[q * n + q] = aqq + t * apq;
    data[p * n + q] = 0.0;
    data[q * n + p] = 0.0;

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[k * n + p];
            let vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
        }
    }
}

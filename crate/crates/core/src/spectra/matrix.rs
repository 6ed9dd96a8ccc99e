use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense symmetric matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds from rows; only the upper triangle is read and mirrored.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate().skip(i) {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                sum += self.get(i, j).powi(2);
            }
        }
        (2.0 * sum).sqrt()
    }

    /// `M x`
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub(crate) fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }
}

/// `A_α(G) = α·D(G) + (1 − α)·A(G)` as a dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaMatrix {
    alpha: f64,
    matrix: SymMatrix,
}

impl AlphaMatrix {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }
}

pub fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

pub fn build_a_alpha(g: &Graph, alpha: f64) -> Result<AlphaMatrix> {
    check_alpha(alpha)?;
    let mut matrix = SymMatrix::zeros(g.n());
    let off = 1.0 - alpha;
    for v in 0..g.n() {
        matrix.set(v, v, alpha * g.degree(v) as f64);
        for &w in g.neighbors(v) {
            matrix.set(v, w, off);
        }
    }
    Ok(AlphaMatrix { alpha, matrix })
}

/// `xᵀMx / xᵀx`.
pub fn rayleigh_quotient(m: &AlphaMatrix, x: &[f64]) -> Result<f64> {
    if x.len() != m.n() {
        return Err(Error::DimensionMismatch {
            expected: m.n(),
            actual: x.len(),
        });
    }
    let norm2: f64 = x.iter().map(|v| v * v).sum();
    if norm2 == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mx = m.matrix().mul_vec(x);
    Ok(x.iter().zip(&mx).map(|(a, b)| a * b).sum::<f64>() / norm2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_entries() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        for alpha in [0.0, 0.3, 1.0] {
            let m = build_a_alpha(&g, alpha).unwrap();
            assert_eq!(m.matrix().row(0), &[alpha, 1.0 - alpha]);
            assert_eq!(m.matrix().row(1), &[1.0 - alpha, alpha]);
        }
    }

    #[test]
    fn endpoints_are_adjacency_and_degree() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let a = build_a_alpha(&g, 0.0).unwrap();
        let d = build_a_alpha(&g, 1.0).unwrap();
        let q = build_a_alpha(&g, 0.5).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let adj = if g.has_edge(i, j) { 1.0 } else { 0.0 };
                let deg = if i == j { g.degree(i) as f64 } else { 0.0 };
                assert_eq!(a.matrix().get(i, j), adj);
                assert_eq!(d.matrix().get(i, j), deg);
                assert_eq!(2.0 * q.matrix().get(i, j), adj + deg);
            }
        }
    }

    #[test]
    fn alpha_range_checked() {
        let g = Graph::empty(2).unwrap();
        assert_eq!(build_a_alpha(&g, 1.5), Err(Error::AlphaOutOfRange(1.5)));
        assert!(build_a_alpha(&g, -0.1).is_err());
        assert!(build_a_alpha(&g, f64::NAN).is_err());
    }

    #[test]
    fn rayleigh_special_vectors() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4), (0, 4)]).unwrap();
        let alpha = 0.35;
        let m = build_a_alpha(&g, alpha).unwrap();
        let mean = 2.0 * g.m() as f64 / g.n() as f64;
        let ones = vec![1.0; 5];
        assert!((rayleigh_quotient(&m, &ones).unwrap() - mean).abs() < 1e-14);
        for i in 0..5 {
            let mut e = vec![0.0; 5];
            e[i] = 2.0;
            let r = rayleigh_quotient(&m, &e).unwrap();
            assert!((r - alpha * g.degree(i) as f64).abs() < 1e-15);
        }
        assert_eq!(rayleigh_quotient(&m, &[0.0; 5]), Err(Error::ZeroVector));
        assert!(rayleigh_quotient(&m, &[1.0; 4]).is_err());
    }
}

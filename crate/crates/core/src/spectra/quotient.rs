use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::jacobi::sym_eigen;
use super::matrix::{check_alpha, SymMatrix};

/// Quotient of A_α(G) by a vertex partition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientResult {
    pub partition: Vec<Vec<usize>>,
    /// Every vertex of block i has the same number of neighbors in block j,
    /// for every ordered pair (i, j).
    pub equitable: bool,
    /// `quotient[i][j]`: row sum of the (i, j) block of A_α, averaged over
    /// the rows of block i (constant across those rows when equitable).
    pub quotient: Vec<Vec<f64>>,
    /// Non-increasing.
    pub quotient_eigenvalues: Vec<f64>,
}

/// Builds the quotient matrix N of A_α(G) for `partition` and its spectrum.
///
/// N is in general not symmetric, but with `S = diag(|P_i|)` the matrix
/// `S^{1/2} N S^{-1/2}` is, because `|P_i|·q_ij` and `|P_j|·q_ji` both count
/// the total weight between blocks i and j. Its eigenvalues are those of N.
pub fn quotient_matrix(g: &Graph, alpha: f64, partition: &[Vec<usize>]) -> Result<QuotientResult> {
    check_alpha(alpha)?;
    let n = g.n();
    let k = partition.len();
    let mut block_of = vec![usize::MAX; n];
    for (b, block) in partition.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::InvalidPartition(format!("block {b} is empty")));
        }
        for &v in block {
            if v >= n {
                return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
            }
            if block_of[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
            }
            block_of[v] = b;
        }
    }
    if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(Error::InvalidPartition(format!(
            "vertex {v} is not covered"
        )));
    }

    // counts[v][j]: neighbors of v inside block j.
    let counts: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut row = vec![0; k];
            for &w in g.neighbors(v) {
                row[block_of[w]] += 1;
            }
            row
        })
        .collect();
    let equitable = partition
        .iter()
        .all(|block| block.iter().all(|&v| counts[v] == counts[block[0]]));

    let quotient: Vec<Vec<f64>> = partition
        .iter()
        .enumerate()
        .map(|(i, block)| {
            (0..k)
                .map(|j| {
                    let total: f64 = block
                        .iter()
                        .map(|&v| {
                            let diag = if j == i {
                                alpha * g.degree(v) as f64
                            } else {
                                0.0
                            };
                            diag + (1.0 - alpha) * counts[v][j] as f64
                        })
                        .sum();
                    total / block.len() as f64
                })
                .collect()
        })
        .collect();

    let mut symmetric = SymMatrix::zeros(k);
    for i in 0..k {
        for j in i..k {
            let ratio = (partition[i].len() as f64 / partition[j].len() as f64).sqrt();
            symmetric.set(i, j, ratio * quotient[i][j]);
        }
    }
    let quotient_eigenvalues = sym_eigen(&symmetric, false)?.values;

    Ok(QuotientResult {
        partition: partition.to_vec(),
        equitable,
        quotient,
        quotient_eigenvalues,
    })
}

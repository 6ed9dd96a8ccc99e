use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{maximum_clique, zagreb_indices};

use super::matrix::build_a_alpha;
use super::{sym_eigenvalues, Spectrum};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TraceResiduals {
    /// |Σλ_i − 2mα|
    pub sum: f64,
    /// |Σλ_i² − α²Z₁ − (1 − α)²·2m|
    pub sum_of_squares: f64,
}

pub fn check_trace_identities(g: &Graph, s: &Spectrum) -> TraceResiduals {
    let alpha = s.alpha;
    let m = g.m() as f64;
    let z1 = zagreb_indices(g, 2.0).expect("p = 2 is valid").first as f64;
    let sum: f64 = s.eigenvalues.iter().sum();
    let sum_sq: f64 = s.eigenvalues.iter().map(|x| x * x).sum();
    TraceResiduals {
        sum: (sum - 2.0 * m * alpha).abs(),
        sum_of_squares: (sum_sq - alpha * alpha * z1 - (1.0 - alpha).powi(2) * 2.0 * m).abs(),
    }
}

/// For an r-regular graph, `max_k |λ_k(A_α) − αr − (1 − α)λ_k(A)|`, from two
/// independent solver runs.
pub fn regular_shift_check(g: &Graph, alpha: f64) -> Result<f64> {
    let degrees = g.degrees();
    let r = degrees[0];
    if degrees.iter().any(|&d| d != r) {
        return Err(Error::NotRegular);
    }
    let shifted = sym_eigenvalues(&build_a_alpha(g, alpha)?)?;
    let adjacency = sym_eigenvalues(&build_a_alpha(g, 0.0)?)?;
    Ok(shifted
        .eigenvalues
        .iter()
        .zip(&adjacency.eigenvalues)
        .map(|(la, l0)| (la - alpha * r as f64 - (1.0 - alpha) * l0).abs())
        .fold(0.0, f64::max))
}

/// `xᵀA(G)x`, summed over ordered adjacent pairs.
pub fn adjacency_form(g: &Graph, x: &[f64]) -> f64 {
    2.0 * g.edges().map(|(u, v)| x[u] * x[v]).sum::<f64>()
}

/// Uniform weights on one maximum clique: the simplex point at which
/// `xᵀAx` attains `1 − 1/ω`.
pub fn clique_witness(g: &Graph) -> Vec<f64> {
    let clique = maximum_clique(g);
    let weight = 1.0 / clique.len() as f64;
    let mut x = vec![0.0; g.n()];
    for v in clique {
        x[v] = weight;
    }
    x
}

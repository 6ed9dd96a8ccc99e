//! A_α matrices and their spectra.

mod identities;
mod jacobi;
mod matrix;
mod quotient;

pub use identities::{
    adjacency_form, check_trace_identities, clique_witness, regular_shift_check, TraceResiduals,
};
pub use jacobi::{sym_eigen, Eigen, MAX_SWEEPS, RELATIVE_TOLERANCE};
pub use matrix::{build_a_alpha, rayleigh_quotient, AlphaMatrix, SymMatrix};
pub use quotient::{quotient_matrix, QuotientResult};

use serde::Serialize;

use crate::error::Result;

/// Eigenvalues of an A_α matrix, sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub alpha: f64,
    pub eigenvalues: Vec<f64>,
    /// Column `k` (i.e. `eigenvectors[k]`) belongs to `eigenvalues[k]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvectors: Option<Vec<Vec<f64>>>,
    /// Off-diagonal Frobenius norm when the solver stopped.
    pub residual: f64,
}

impl Spectrum {
    /// λ₁
    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// λₙ
    pub fn smallest(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }
}

/// Eigenvalues of `matrix`.
pub fn sym_eigenvalues(matrix: &AlphaMatrix) -> Result<Spectrum> {
    let eigen = sym_eigen(matrix.matrix(), false)?;
    Ok(Spectrum {
        alpha: matrix.alpha(),
        eigenvalues: eigen.values,
        eigenvectors: None,
        residual: eigen.residual,
    })
}

/// Eigenvalues of `matrix` together with an orthonormal eigenbasis.
pub fn sym_eigensystem(matrix: &AlphaMatrix) -> Result<Spectrum> {
    let eigen = sym_eigen(matrix.matrix(), true)?;
    Ok(Spectrum {
        alpha: matrix.alpha(),
        eigenvalues: eigen.values,
        eigenvectors: eigen.vectors,
        residual: eigen.residual,
    })
}

//! Spectral toolkit for the A_α family of graph matrices.
//!
//! `A_α(G) = α·D(G) + (1 − α)·A(G)` interpolates between the adjacency matrix
//! (α = 0), half the signless Laplacian (α = 1/2) and the degree matrix
//! (α = 1). This crate builds those matrices, computes their spectra with a
//! cyclic Jacobi solver, computes the graph invariants that eigenvalue bounds
//! are phrased in, and evaluates each bound together with its applicability
//! conditions and equality cases.
//!
//! Module map:
//!
//! * [`graph`]: immutable simple graphs and structural queries.
//! * [`graph6`]: graph6 and edge-list readers/writers.
//! * [`invariants`]: degrees, Zagreb indices, clique number, Das's Z₁ bounds.
//! * [`spectra`]: A_α construction, Jacobi eigensolver, Rayleigh quotients,
//!   equitable quotients and spectral identity checks.
//! * [`bounds`]: one evaluator per eigenvalue bound, producing [`BoundReport`]s.
//! * [`generators`]: named families, the H_{n−1,Δ₂} family, G(n, p) and
//!   exhaustive enumeration.

pub mod bounds;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod spectra;

pub use bounds::{evaluate_all, BoundId, BoundReport, Evaluation, GraphAnalysis, Outcome, Side};
pub use error::{Error, Result};
pub use graph::{Graph, Regularity, StructureProfile};
pub use invariants::InvariantSet;
pub use spectra::{AlphaMatrix, QuotientResult, Spectrum, SymMatrix};

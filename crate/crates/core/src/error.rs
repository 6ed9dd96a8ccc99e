use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("alpha = {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error(
        "Jacobi solver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})"
    )]
    NonConvergence { sweeps: usize, residual: f64 },
    #[error("zero vector has no Rayleigh quotient")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("graph is not regular")]
    NotRegular,

    #[error("invalid Zagreb exponent p = {0}")]
    InvalidExponent(f64),
    #[error("Das lower bound needs n >= 3, got n = {0}")]
    TooFewVertices(usize),
    #[error("negative discriminant {0:e}")]
    NegativeDiscriminant(f64),

    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
}

//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("metric is degenerate at the evaluation point")]
    DegenerateMetric,
    #[error("volume density must be positive at the evaluation point")]
    NonpositiveVolume,
    #[error("invalid signature (q={q}, n={n})")]
    InvalidSignature { q: usize, n: usize },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("no exact representation: {0}")]
    InexactRoot(String),
    #[error("schema: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;

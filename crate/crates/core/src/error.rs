//! Library error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a rational coefficient: {0:?}")]
    BadCoefficient(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: i64, dim: usize },

    #[error("operation requires a finite-dimensional presentation, got {0}")]
    NotFiniteDimensional(String),

    #[error("{law} fails at {witness}")]
    LawViolation { law: String, witness: String },

    #[error("{which} is not an algebra morphism; first defect at basis pair ({i}, {j})")]
    NotAMorphism { which: String, i: i64, j: i64 },

    #[error("extension refused: compatibility fails at {witness}")]
    Refused { witness: String },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

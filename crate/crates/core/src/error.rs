//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} exceeds the supported maximum of 63 basis vectors")]
    DimensionTooLarge(usize),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not square or does not match the declared dimension")]
    BadMatrixShape,

    #[error("the form is not diagonal")]
    NotDiagonal,

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("not invertible: x * rev(x) must be a nonzero scalar")]
    NotInvertible,

    #[error(
        "unknown preset {0:?} (valid: complex, quaternion, cga2, cga3, pga3, euclid2, euclid3)"
    )]
    UnknownPreset(String),

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("metric file: {0}")]
    MetricFile(String),

    #[error("internal assertion failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

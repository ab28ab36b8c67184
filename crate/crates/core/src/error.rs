use thiserror::Error;

/// Errors reported by cone operations.
///
/// Indices in error payloads are 0-based; user-facing layers translate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("entries must be finite and nonnegative, got {value}")]
    InvalidEntry { value: f64 },

    #[error("a matrix must have at least one row")]
    NoRows,

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("the zero vector cannot be scaled")]
    ZeroVector,

    #[error("coordinate {index} is outside the support")]
    OutsideSupport { index: usize },

    #[error("column {index} is zero")]
    ZeroColumn { index: usize },

    #[error("instance too large for exhaustive search ({rows} rows, {cols} columns)")]
    InstanceTooLarge { rows: usize, cols: usize },

    #[error("the target vector is not a member of the span")]
    NotInSpan,

    #[error("tolerance parameters must be finite and nonnegative, got {value}")]
    InvalidTolerance { value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

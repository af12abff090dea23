use thiserror::Error;

/// Errors raised by the Toeplitz FNF pipeline.
///
/// `Contract` errors mean an operation was called outside its domain. When
/// they surface from [`compute_fnf`](crate::fnf::compute_fnf) they indicate an
/// internal bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FnfError {
    #[error("first row must contain at least one entry")]
    EmptyRow,

    #[error("index ({i}, {j}) out of range for order {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("invalid offset set for order {n}: {reason}")]
    InvalidOffsets { n: usize, reason: String },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid component index sequence: {0}")]
    InvalidCis(String),

    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, FnfError>;

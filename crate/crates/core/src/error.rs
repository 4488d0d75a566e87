use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: se({left}) vs se({right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension n must be at least 1")]
    ZeroDimension,

    #[error("invalid basis element for se({n}): {reason}")]
    InvalidBasis { n: usize, reason: String },

    #[error("entry ({i}, {j}): {reason}")]
    InvalidEntry { i: usize, j: usize, reason: String },

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("invalid cost: {0}")]
    InvalidCost(String),

    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

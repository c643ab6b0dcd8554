use thiserror::Error;

/// Errors raised by the combinatorial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("capacity exceeded at position {position}: {count} > {capacity}")]
    Capacity {
        position: usize,
        count: usize,
        capacity: usize,
    },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn validation<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Validation(msg.into()))
}

use thiserror::Error;

/// Failures of construction and of the exact algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group of order {order} exceeds the configured cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("operands live over different groups")]
    GroupMismatch,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("not injective: {0}")]
    NotInjective(String),
    #[error("underlying graph is disconnected: {0}")]
    Disconnected(String),
    #[error("{0}")]
    Parse(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

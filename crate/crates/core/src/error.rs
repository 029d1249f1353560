use thiserror::Error;

/// Errors raised by the symmetric-function machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} exceeds the configured cap {cap}")]
    CapExceeded { degree: usize, cap: usize },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },

    #[error("unknown basis tag `{tag}` at byte {offset}")]
    UnknownBasis { tag: String, offset: usize },

    #[error("oracle not applicable: {0}")]
    OracleInapplicable(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

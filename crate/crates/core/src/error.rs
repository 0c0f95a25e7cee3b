use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid algebra signature: {0}")]
    InvalidSignature(String),

    #[error("unsupported on symbolic algebras: {0}")]
    UnsupportedSymbolic(String),

    #[error("unsupported filter shape: {0}")]
    UnsupportedFilter(String),

    #[error("filter is not prime: {0}")]
    NotPrime(String),

    #[error("filters are comparable: {0}")]
    Comparable(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("parse error at byte {offset}: expected {}, found {found}", expected.join(" | "))]
    Parse {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },

    #[error("semantic error: {0}")]
    Semantic(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

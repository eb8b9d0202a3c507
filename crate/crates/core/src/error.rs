use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {input:?}: {reason}")]
    InvalidPartition { input: String, reason: String },

    #[error("invalid coset pattern {pattern:?}: {reason}")]
    InvalidPattern { pattern: String, reason: String },

    #[error("n = {n} is below the stable range: need n >= {required} (lengths of lambda and mu)")]
    RankTooSmall { n: usize, required: usize },

    #[error("invalid truncation: {0}")]
    InvalidTruncation(String),

    /// Exact division left a remainder; this indicates a bug, never bad input.
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

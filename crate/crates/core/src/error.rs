use thiserror::Error;

/// Errors produced by lunar arithmetic and the structures built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LunarError {
    #[error("invalid base {0}: must be at least 2 (at most 36 for text)")]
    InvalidBase(u32),

    #[error("empty input")]
    EmptyInput,

    #[error("invalid digit {ch:?} for base {base}")]
    InvalidDigit { ch: char, base: u32 },

    #[error("digit {digit} out of range for base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },

    #[error("base mismatch: {0} vs {1}")]
    BaseMismatch(u32, u32),

    #[error("digits are not non-decreasing from most to least significant")]
    NotNondecreasing,

    #[error("dominance violated: {0}")]
    DominanceViolated(String),

    #[error("invalid construction parameter: {0}")]
    InvalidParams(String),

    #[error("invalid document: {0}")]
    InvalidDocument(String),

    #[error("invalid search spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, LunarError>;

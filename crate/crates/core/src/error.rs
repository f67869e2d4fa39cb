use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("sequence length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("zero denominator at n = {n}")]
    ZeroDenominator { n: usize },

    #[error("sequence is not strictly increasing at n = {n}")]
    NotStrictlyIncreasing { n: usize },

    #[error("argument must be positive")]
    NonPositive,

    #[error("empty word")]
    EmptyWord,

    #[error("closure hypotheses violated at length {n}: {reason}")]
    HypothesisViolation { n: usize, reason: String },

    #[error("element budget of {limit} exceeded while enumerating radius {radius}")]
    BudgetExceeded { limit: u64, radius: usize },

    #[error("internal disagreement: {0}")]
    Disagreement(String),

    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,

    #[error("invalid letter: generator {index} outside alphabet of size {size}")]
    InvalidLetter { index: usize, size: usize },

    #[error("graph file line {line}: {reason}")]
    GraphSpec { line: usize, reason: String },

    #[error("generating sets do not generate the same group: {0}")]
    Generation(String),

    #[error("conjugacy counts unstable at slack {slack}")]
    Unstable { slack: usize },

    #[error("{0}")]
    Config(String),
}

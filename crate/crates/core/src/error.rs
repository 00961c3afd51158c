use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("hook index j={j} out of range for l={l}")]
    HookIndex { l: i64, j: i64 },
    #[error("diagram has {rows} rows but the matrix size is {k}")]
    TooManyRows { rows: usize, k: usize },
    #[error("truncation exhausted: need exponent {needed}, series known below {available}")]
    TruncationExhausted { needed: i64, available: i64 },
    #[error("matrix kind {0} needs a value of k")]
    MissingK(&'static str),
    #[error("l={l} out of range for matrix kind {kind}")]
    MatrixSize { kind: &'static str, l: i64 },
    #[error("missing prerequisite: {0}")]
    MissingPrerequisite(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("no rational function of the requested degrees fits the samples")]
    NoRationalFunction,
    #[error("duplicate sample point {0}")]
    DuplicateSample(String),
    #[error("not enough samples: have {have}, need {need}")]
    TooFewSamples { have: usize, need: usize },
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("insufficient terms: have {have}, need {need}")]
    InsufficientTerms { have: usize, need: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

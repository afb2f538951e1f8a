use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field order {0}: expected a prime power between 2 and 256")]
    InvalidField(u64),

    #[error("field mismatch: expected q = {expected}, found q = {found}")]
    FieldMismatch { expected: u64, found: u64 },

    #[error("value {value} is out of range: {what}")]
    OutOfRange { what: String, value: i64 },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("generators are linearly dependent (rank {rank} < {count})")]
    DependentGenerators { rank: usize, count: usize },

    #[error("enumeration budget exceeded for {what}: {size} items > cap {cap}")]
    BudgetExceeded { what: String, size: String, cap: u64 },

    #[error("series has zero constant term")]
    SingularSeries,

    #[error("series truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("not enough arguments: need {needed}, got {got}")]
    Arity { needed: usize, got: usize },

    #[error("degenerate reference: p_{{tau,0}} vanishes for tau = {tau}, i = {i}")]
    DegenerateReference { tau: usize, i: usize },

    #[error("missing row {0} in moment table")]
    MissingRow(usize),

    #[error("inconsistent weight tuple: {0}")]
    InvalidWeights(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn out_of_range(what: impl Into<String>, value: i64) -> Self {
        Error::OutOfRange {
            what: what.into(),
            value,
        }
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("half-product of two unit terms is undefined")]
    UnitHalfProduct,

    #[error("expected zero constant term")]
    NonzeroConstantTerm,

    #[error("expected constant term equal to one")]
    ConstantTermNotOne,

    #[error("degree-0 object has no {0}")]
    DegreeZero(&'static str),

    #[error("duplicate entry {0} in word")]
    DuplicateEntry(i64),

    #[error("not a permutation: {0}")]
    NotPermutation(String),

    #[error("invalid level map: {0}")]
    InvalidLevels(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square")]
    NotSquare,

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

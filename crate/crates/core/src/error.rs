use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("coefficient at exponent {exponent:?} is beyond the known order {known:?}")]
    OutOfKnownRange { exponent: [i32; 3], known: [i32; 3] },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("constant term is not the identity matrix")]
    NotUnitriangularConstantTerm,
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("element has loop degree {found}, above the requested degree {cap}")]
    DegreeExceeded { found: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("truncation order {have} is too small, need at least {need}")]
    OrderTooSmall { have: usize, need: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.

use thiserror::Error;

use crate::exactalg::AlgError;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YmError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("unsupported rank {n} for {family}")]
    UnsupportedRank { family: String, n: usize },
    #[error("operation not available for {0}")]
    UnsupportedFamily(String),
    #[error("topological class {class} does not match {group}")]
    TopClassMismatch { group: String, class: String },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("inadmissible parabolic index: {0}")]
    InadmissibleCase(String),
    #[error("exponent {0} is not a natural number")]
    NonIntegerExponent(String),
    #[error("codimension {0} is not a natural number")]
    NonIntegerCodimension(String),
    #[error("point lies in a split set and needs a component tag")]
    AmbiguousComponent,
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("sample point lies on a wall")]
    WallPoint,
    #[error("truncation order too small: {0}")]
    TruncationTooSmall(String),
    #[error("engines disagree: {0}")]
    EngineMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, YmError>;

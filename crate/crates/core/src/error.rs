use alloc::string::String;

use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("Euler number is undefined for this manifold")]
    DegenerateEuler,
    #[error("first homology is undefined for this manifold")]
    DegenerateH1,
    #[error("{0} exceptional fibers are not supported")]
    UnsupportedFiberCount(usize),
    #[error("more than one degenerate fiber alongside finite fibers")]
    InvalidDegenerate,
    #[error("slope {0} must lie strictly between 0 and 1")]
    SlopeOutOfRange(String),
    #[error("determinant of the framing matrix is {0}, expected 1")]
    Determinant(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

use thiserror::Error;

use crate::scalar::Backend;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("{0}")]
    Parse(String),
    #[error("NaN coefficient")]
    NotANumber,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator index `{0}` (expected 0, 1, 2, 3 or inf)")]
    UnknownGenerator(String),
    #[error("grade {0} out of range 0..=5")]
    GradeOutOfRange(i64),
    #[error("backend mismatch: {0} vs {1}")]
    BackendMismatch(Backend, Backend),
    #[error("multivector is not invertible")]
    NotInvertible,
    #[error("symbolic inverse unsupported: A*rev(A) is not a scalar")]
    UnsupportedSymbolicInverse,
    #[error("{0}")]
    InvalidInput(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

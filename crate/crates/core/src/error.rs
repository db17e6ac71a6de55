use thiserror::Error;

use crate::monomial::ExponentVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("generator {0} of the base algebra does not lie in the extension")]
    NotContained(ExponentVector),

    #[error("the base and the extension have different fraction groups")]
    FractionGroupMismatch,

    #[error("degree {0} is not in the extension")]
    NotInExtension(ExponentVector),

    #[error("degree {0} lies outside the degree box")]
    OutsideBox(ExponentVector),

    #[error("presentation incomplete: no representation of degree {0} over the module generators")]
    PresentationIncomplete(ExponentVector),

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("radicand {0} is not squarefree")]
    NotSquarefree(i64),
    #[error("radicand {0} does not define a quadratic field")]
    DegenerateRadicand(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero root: roots must be nonzero")]
    ZeroRoot,
    #[error("could not certify {what} at {precision} bits")]
    CannotCertify { what: &'static str, precision: u32 },
    #[error("polynomial does not split over {0}")]
    NotSplit(String),
    #[error("polynomial is not primitive")]
    NotPrimitive,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("unsupported field {0}")]
    UnsupportedField(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("enumeration infeasible: {0}")]
    Infeasible(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

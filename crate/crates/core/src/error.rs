use thiserror::Error;

/// Errors raised by the number-theoretic kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be a positive integer, got 0")]
    Zero,

    #[error("{0} is not square-free")]
    NotSquareFree(u64),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("singular curve: discriminant is zero")]
    Singular,

    #[error("point is not on the curve")]
    NotOnCurve,

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

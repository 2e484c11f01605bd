use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("prime {0} is too large (p^2 must fit in 32 bits)")]
    PrimeTooLarge(u64),
    #[error("operation requires an even degree, got s = {0}")]
    OddDegree(usize),
    #[error("element is not a unit")]
    NonUnit,
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("incompatible rings: {0}")]
    Incompatible(String),
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("{what} has size {size}, above the limit {limit}")]
    LimitExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("{0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn invalid_code(message: impl Into<String>) -> Self {
        Error::InvalidCode(message.into())
    }
}

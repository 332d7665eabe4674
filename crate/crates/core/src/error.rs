use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime")]
    InvalidModulus(u64),

    #[error("division by zero in F_{0}")]
    DivisionByZero(u64),

    #[error("element is not invertible: {0}")]
    NonInvertible(String),

    #[error("incompatible rings: {0}")]
    IncompatibleRings(String),

    #[error("exponent {exponent} exceeds the truncation bound {bound}")]
    ExponentOutOfRange { exponent: u32, bound: u32 },

    #[error("malformed matrix: {0}")]
    Structural(String),

    #[error("invalid multiplicity parameter: {0}")]
    InvalidK(String),

    #[error("invalid manifold specification: {0}")]
    Spec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Domain(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u128, u128),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("value out of supported range: {0}")]
    Unsupported(String),
    #[error("polynomial division by zero")]
    DivisionByZeroPoly,
    #[error("coefficient fields differ: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("characteristic 2 is not supported here")]
    CharTwoUnsupported,
    #[error("zero element")]
    ZeroElement,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is not irreducible: {0}")]
    NotIrreducible(String),
    #[error("primality criteria disagree on {0} (internal bug)")]
    CriteriaDisagree(String),
    #[error("exponent sequence is not representable: {0}")]
    NotRepresentable(String),
    #[error("not a prime element of D: {0}")]
    NotAPrime(String),
    #[error("unsupported coefficient field: {0}")]
    UnsupportedField(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

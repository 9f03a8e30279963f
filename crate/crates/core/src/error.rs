use thiserror::Error;

/// Errors raised by the library. Mathematical discrepancies are not errors;
/// they surface as failed [`crate::VerificationReport`]s.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("substitution q -> q^0 is not allowed")]
    ZeroSubstitution,

    #[error("modulus of a q-base must be positive")]
    ZeroModulus,

    #[error("monomial sign must be +1 or -1, got {0}")]
    InvalidSign(i32),

    #[error("series truncation bounds differ: {left} vs {right}")]
    TruncationMismatch { left: i64, right: i64 },

    #[error("series inverse needs constant term +1 or -1, found {0}")]
    NonUnitConstant(String),

    #[error("series inverse needs non-negative exponents, found half-step exponent {0}")]
    NegativeExponent(i64),

    #[error("infinite product with base exponent {0} (half-steps) does not converge")]
    DivergentProduct(i64),

    #[error("invalid weight arguments: {0}")]
    InvalidWeightArgs(String),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("partition ({0}) violates the gap conditions")]
    NotAdmissible(String),

    #[error("motion data does not fit the configuration: {0}")]
    InvalidMotion(String),

    #[error("no motion rule applies: {0}")]
    NoRuleApplies(String),

    #[error("minimal configuration has largest part {largest}, above the bound {bound}")]
    BoundExceeded { largest: i64, bound: i64 },

    #[error("could not invert the bijection for ({0})")]
    DecodeFailed(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;

/// Errors raised by the algebraic routines.
///
/// `Input` style variants describe bad arguments; [`Error::VerificationFailed`]
/// means a self-check on a known-true identity did not hold, which is always
/// an implementation bug rather than a mathematical outcome.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("divisor must be nonzero with leading coefficient +1 or -1")]
    NonUnitDivisor,
    #[error("linear system is singular")]
    SingularSystem,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("degree sequence must be strictly increasing")]
    NotStrictlyIncreasing,
    #[error("degree sequence needs at least two entries")]
    SequenceTooShort,
    #[error("Betti numbers must be nonnegative")]
    NegativeBetti,
    #[error("point does not satisfy the Herzog-Kühl equations")]
    NotOnRay,
    #[error("dimension vector must have positive total dimension")]
    EmptyDimensionVector,
    #[error("operands live in different rings")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

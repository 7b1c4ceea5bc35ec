use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^20")]
    InvalidModulus(u64),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("colon ideal by the zero ideal")]
    QuotientByZero,
    #[error("codimension of the unit ideal is undefined")]
    UnitIdeal,
    #[error("defining ideal contains 1; the ring is zero")]
    ZeroRing,
    #[error(
        "no {0}x{0} Jacobian minor is nonzero modulo the relations; supply a conductor element"
    )]
    ConductorNotFound(usize),
    #[error("conductor element is zero in the ring")]
    DZero,
    #[error("element is a nonzerodivisor; nothing to split")]
    NotAZeroDivisor,
    #[error("ideal does not contain the defining ideal")]
    NotALift,
    #[error("closure chain did not stabilize within {0} steps")]
    IterationLimitExceeded(usize),
    #[error("component splitting exceeded depth {0}")]
    SplitDepthExceeded(usize),
    #[error("Buchberger pair queue exceeded {0} pairs")]
    PairLimitExceeded(usize),
}

use thiserror::Error;

/// Errors raised by the polynomial constructions and the verification harness.
#[derive(Debug, Error)]
pub enum Error {
    /// An exact division left a nonzero remainder.
    #[error("division is not exact (nonzero remainder)")]
    NonExactDivision,

    /// Two operands live in different coefficient rings (different `d`).
    #[error("coefficient ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{t} does not divide {n}")]
    NotADivisor { t: u64, n: u64 },

    #[error("argument must be nonzero")]
    ZeroArgument,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad classes of failure; the CLI maps each to an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or invalid input.
    Validation,
    /// Input is well-formed but outside the operation's domain.
    Precondition,
    /// A configured cap or budget was exceeded.
    Resource,
    /// A checked invariant failed. Always a bug.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable index x{index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("negative exponent at byte {pos}")]
    NegativeExponent { pos: usize },
    #[error("exponent {exponent} exceeds the configured cap {cap}")]
    ExponentCap { exponent: u32, cap: u32 },
    #[error("ambient variable counts differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { divisor: String, dividend: String },
    #[error("an ideal needs at least one generator")]
    EmptyIdeal,
    #[error("the unit ideal is not supported")]
    UnitIdeal,
    #[error("invalid canonical critical spec: {0}")]
    InvalidSpec(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("input ideal is critical; use `critical decompose` for canonical critical ideals")]
    CriticalInput,
    #[error("{what} exceeds the configured limit {limit}")]
    Resource { what: String, limit: u64 },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("lex ideal not certified before degree ceiling {ceiling}")]
    DegreeCeiling { ceiling: u32 },
    #[error("depth overstated: difference sequence is negative ({value}) in degree {degree}")]
    DepthOverstated { degree: usize, value: i128 },
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Syntax { .. }
            | Error::VariableOutOfRange { .. }
            | Error::NegativeExponent { .. }
            | Error::ExponentCap { .. }
            | Error::AmbientMismatch { .. }
            | Error::NotDivisible { .. }
            | Error::EmptyIdeal
            | Error::UnitIdeal
            | Error::InvalidSpec(_)
            | Error::InvalidArgument(_) => ErrorKind::Validation,
            Error::CriticalInput => ErrorKind::Precondition,
            Error::Resource { .. } | Error::Overflow(_) => ErrorKind::Resource,
            Error::DegreeCeiling { .. } | Error::DepthOverstated { .. } | Error::Internal(_) => {
                ErrorKind::Internal
            }
        }
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

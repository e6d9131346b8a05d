use thiserror::Error;

/// Errors raised by arrangement computations.
///
/// Certificate failures are not errors: they are reported as failed checks
/// inside a [`crate::certificate::CertificateReport`]. The variants here are
/// reserved for violated preconditions and for internal inconsistencies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arrangement is not simple: {0}")]
    NotSimple(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("polynomial is not divisible by x: monomial {0} has no factor of x")]
    DivisionFailure(String),

    #[error("element is not in the image of the basis lattice: {0}")]
    NotInImage(String),

    #[error("restriction mismatch: {0}")]
    RestrictionMismatch(String),

    #[error("parity failure while dividing by x: {0}")]
    ParityFailure(String),

    #[error("index {index} out of range for {len} hyperplanes")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

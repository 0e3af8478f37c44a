//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("not an association scheme: {0}")]
    NotAScheme(String),

    #[error("inconsistent intersection counts: {0}")]
    InconsistentCounts(String),

    #[error("tensor has no rows for left factor ({0},{1})")]
    MissingRows(u32, u32),

    #[error("irrational eigenvalue: {0}")]
    NonRationalSpectrum(String),

    #[error("common eigenspaces not separated by the two generators: {0}")]
    NonSeparated(String),

    #[error("vanishing recurrence pivot at ({0},{1}); metric conditions do not hold")]
    VanishingPivot(u32, u32),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("degenerate denominator: {0}")]
    DegenerateDenominator(String),

    #[error("class count {0} exceeds search guard {1}")]
    SearchGuard(usize, usize),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, SchemeError>;

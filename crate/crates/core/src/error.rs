use thiserror::Error;

use crate::arith::FACTOR_CAP;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is below 2")]
    TooSmall(u64),

    #[error("{0} exceeds the factorization cap {cap}", cap = FACTOR_CAP)]
    AboveCap(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("exponent prime {0} must be an odd prime")]
    InvalidExponentPrime(u32),

    #[error("{value} is not {p}th-power-free")]
    NotPowerFree { value: u64, p: u32 },

    #[error("{0} reduces to a perfect power and defines no field")]
    TrivialRadicand(u64),

    #[error("operation requires the quintic case, got p = {0}")]
    NotQuintic(u32),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("malformed factorization {0:?}")]
    MalformedFactorization(String),

    #[error("no field has conductor class ({species}; u = {u}, v = {v})")]
    NoSuchConductor {
        species: &'static str,
        u: u32,
        v: u32,
    },

    #[error("{0} is not a valid conductor")]
    InvalidConductor(String),

    #[error("split exponent is required for q = 5 in species 2")]
    MissingSplitExponent,

    #[error("split exponent must be 1 or 4, got {0}")]
    InvalidSplitExponent(u32),

    #[error("unknown DPF type {0:?}")]
    UnknownType(String),

    #[error("malformed eligibility pattern {0:?}")]
    MalformedPattern(String),

    #[error("unknown species tag {0:?}")]
    UnknownSpecies(String),

    #[error("inconsistent invariants: {0}")]
    Inconsistent(String),

    #[error("prime {0} is not supported, expected 3 or 5")]
    UnsupportedPrime(u32),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("zero vector spans no line")]
    ZeroVector,

    #[error("vector is not in the kernel of the norm to M")]
    NotInKernel,

    #[error("density is defined for t >= 1, got {0}")]
    InvalidPrimeCount(u32),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o failure: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

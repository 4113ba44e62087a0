//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    // finite fields
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of order {order} exceeds the supported maximum {max}")]
    FieldTooLarge { order: u128, max: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus is not monic of the requested degree or is reducible")]
    InvalidModulus,
    #[error("operation requires an extension field, got a prime field")]
    NotExtension,
    #[error("{0} is not the order of a subfield in this tower")]
    NotSubfield(u64),
    #[error("element index {index} is outside a field of order {order}")]
    InvalidElement { index: u64, order: u32 },
    #[error("division by zero")]
    DivisionByZero,

    // matrices and vectors
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("block profiles do not match")]
    ProfileMismatch,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid block profile: {0}")]
    InvalidProfile(String),

    // oracles
    #[error("exhaustive search needs {bits:.2} bits of enumeration, cap is {cap}")]
    TooLarge { bits: f64, cap: u32 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,

    // code constructions
    #[error("code length {n} exceeds the field order {order}")]
    LengthExceedsField { n: usize, order: u32 },
    #[error("parameter out of range: {0}")]
    DegreeOutOfRange(String),
    #[error("block length {0} is too small (need at least 2)")]
    BlockLengthTooSmall(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("generator matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    // bounds
    #[error("distance {d} is outside 1..={max}")]
    DistanceOutOfRange { d: usize, max: usize },
    #[error("profile must satisfy m_1 >= m_2 >= ... >= m_t")]
    UnsortedProfile,
    #[error("distance {0} is too small, need d > 2")]
    DistanceTooSmall(usize),
    #[error("value outside the domain: {0}")]
    DomainError(String),
    #[error("{0} is not the square of a prime power")]
    NotSquare(u64),
    #[error("inner dimension {0} is not even")]
    OddInnerDimension(usize),
    #[error("parameter constraint violated: {0}")]
    ParamConstraintViolated(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

//! Crate-wide error type and the coarse classification used for exit codes.

use thiserror::Error;

/// Coarse failure class. Callers that turn errors into process exit codes
/// map `Validation` to 2, `Budget` to 3 and `Io` to 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Validation,
    Budget,
    Io,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension must be in 1..=64, got {0}")]
    DimensionOutOfRange(usize),
    #[error("bit pattern has set positions outside dimension {m}")]
    BitsOutsideDimension { m: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("coordinate {coord} outside 1..={m}")]
    CoordinateOutOfRange { coord: usize, m: usize },
    #[error("duplicate coordinate {0}")]
    DuplicateCoordinate(usize),
    #[error("face {b} is not strictly contained in face {a}")]
    NotStrictlyContained { a: String, b: String },
    #[error("faces must have disjoint supports, overlap at {overlap}")]
    OverlappingFaces { overlap: String },
    #[error("face sizes must satisfy 0 < |B| < |A|, got |A|={a}, |B|={b}")]
    FaceSizeOrder { a: u32, b: u32 },
    #[error("dimension must be a positive even number, got {0}")]
    OddDimension(usize),
    #[error("defining set is empty")]
    EmptyDefiningSet,
    #[error("defining set contains the zero vector")]
    ZeroVectorInSet,
    #[error("defining set contains duplicate vector {0}")]
    DuplicateVector(String),
    #[error("code length {n} exceeds the cap {cap}")]
    LengthCapExceeded { n: u128, cap: usize },
    #[error("complex has {count} maximal faces, cap is {cap}")]
    TooManyMaximalFaces { count: usize, cap: usize },
    #[error("enumeration needs {need} steps, cap is {cap}")]
    EnumerationCapExceeded { need: u128, cap: u128 },
    #[error("message dimension {m} exceeds budget {max} (2^m messages)")]
    MessageSpaceBudget { m: usize, max: usize },
    #[error("span dimension {k} exceeds budget {max} (2^k codewords)")]
    SpanBudget { k: usize, max: usize },
    #[error("enumeration work {need} exceeds budget {max}")]
    WorkBudget { need: u128, max: u128 },
    #[error("column search would need {need} table entries, cap is {cap}")]
    SearchBudget { need: u128, cap: u128 },
    #[error(
        "weight-{weight} message count {count} is not divisible by {divisor}; \
         generator rank is inconsistent"
    )]
    NonIntegralFrequency { weight: usize, count: u64, divisor: u64 },
    #[error("operation undefined for the zero code")]
    ZeroCode,
    #[error("dual code is zero-dimensional")]
    ZeroDual,
    #[error("code carries no full construction matrix")]
    MissingFullMatrix,
    #[error("weight formula requires a nonzero message vector")]
    ZeroMessage,
    #[error("Griesmer bound violated: sum {sum} > {n} for [{n},{k},{d}]")]
    GriesmerViolated { n: u64, k: u64, d: u64, sum: u64 },
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("optimality table: {0}")]
    Table(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            MessageSpaceBudget { .. }
            | SpanBudget { .. }
            | WorkBudget { .. }
            | SearchBudget { .. }
            | EnumerationCapExceeded { .. }
            | TooManyMaximalFaces { .. }
            | LengthCapExceeded { .. } => ErrorKind::Budget,
            Io(_) => ErrorKind::Io,
            _ => ErrorKind::Validation,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector {0} has a negative coordinate")]
    Negative(String),
    #[error("the zero vector is not allowed as a generator")]
    ZeroGenerator,
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{0} is not contained in the ambient semigroup")]
    NotContained(String),
    #[error("{0} is not a minimal generator")]
    NotMinimalGenerator(String),
    #[error("gcd of the generators is {0}, not 1")]
    GcdNotOne(BigInt),
    #[error("the monoid is not cofinite")]
    NotCofinite,
    #[error("the ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("value too large for enumeration: {0}")]
    TooLarge(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use std::fmt;

/// Error type for all fallible operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Grassmannian parameters must satisfy 0 < m < d.
    InvalidContext { d: u32, m: u32 },
    /// A symbol is not weakly increasing or does not fit the context's box.
    InvalidSymbol { symbol: Vec<u32>, d: u32, m: u32 },
    /// Two classes from different Grassmannians (or rings) were combined.
    ContextMismatch,
    /// A numeric argument is outside its documented range.
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    /// A checker received the wrong number of color specs.
    SpecCount { expected: usize, got: usize },
    /// Geometric inputs of mismatched ambient dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// An empty set list or empty color class where at least one element is required.
    EmptyInput(&'static str),
    /// Flat directions are linearly dependent.
    DegenerateDirections,
    /// Malformed structured input (JSON schema violation, bad rational, ...).
    BadInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidContext { d, m } => {
                write!(f, "invalid Grassmannian G({d},{m}): need 0 < m < d")
            }
            Error::InvalidSymbol { symbol, d, m } => {
                write!(
                    f,
                    "invalid Schubert symbol {symbol:?} for G({d},{m}): entries must be weakly increasing and at most {}",
                    d - m
                )
            }
            Error::ContextMismatch => write!(f, "operands live in different Grassmannians"),
            Error::OutOfRange {
                what,
                value,
                min,
                max,
            } => write!(f, "{what} = {value} out of range [{min}, {max}]"),
            Error::SpecCount { expected, got } => {
                write!(f, "expected {expected} color specs, got {got}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "ambient dimension mismatch: expected {expected}, got {got}")
            }
            Error::EmptyInput(what) => write!(f, "{what} must be nonempty"),
            Error::DegenerateDirections => write!(f, "flat directions are linearly dependent"),
            Error::BadInput(msg) => write!(f, "bad input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

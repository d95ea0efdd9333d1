use thiserror::Error;

use crate::skeleton::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input word is empty")]
    EmptyInput,
    #[error("invalid symbol {symbol:?} at token {token}")]
    InvalidSymbol { token: usize, symbol: String },
    #[error("position {pos} is outside 1..={max}")]
    OutOfRange { pos: usize, max: usize },
    #[error("pattern symbol at index {index} does not occur in the word")]
    AlphabetMismatch { index: usize },
    #[error("pattern cannot be extended to a minimal absent subsequence")]
    NotMasPrefix,
    #[error("the enumerator has not produced a path yet")]
    NoCurrentPath,
    #[error("word of length {n} is too long for the exhaustive checker (limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("skeleton is malformed ({} violations)", .0.len())]
    InvalidSkeleton(Vec<Violation>),
    #[error("key {0} is already present")]
    DuplicateKey(usize),
    #[error("set already holds {0} keys")]
    CapacityExceeded(usize),
    #[error("key {0} is not present")]
    NotFound(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(usize),
    #[error("{core} is not a {p}-core")]
    NotACore { core: String, p: usize },
    #[error("expected {expected} quotient components, got {got}")]
    QuotientArity { expected: usize, got: usize },
    #[error("the empty partition has no Frobenius coordinates")]
    EmptyPartition,
    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(String),
    #[error("2-adic valuation of zero is undefined")]
    ZeroValuation,
    #[error("tower entry at path {path} is not a 2-core: {entry}")]
    NotAStaircase { path: String, entry: String },
    #[error("partition size must be at least {min}, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error("partition size {got} exceeds the enumeration cap of {cap}")]
    TooLarge { cap: usize, got: usize },
    #[error("inexact division computing g for {0}")]
    InexactDivision(String),
    #[error("no chiral partitions of {n}{}", .valuation.map(|v| format!(" with 2-adic valuation {v}")).unwrap_or_default())]
    EmptyStratum { n: u64, valuation: Option<u32> },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

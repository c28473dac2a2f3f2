use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty point set")]
    EmptyInput,
    #[error("invalid root system {label}{rank}")]
    InvalidType { label: String, rank: usize },
    #[error("weight {0:?} is not in the root lattice")]
    NotInRootLattice(Vec<i64>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("simple reflection index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("Weyl group of order {order} exceeds the enumeration bound {bound}")]
    WeylBoundExceeded { order: u128, bound: u128 },
    #[error("excluded by hypothesis: {0}")]
    ExcludedByHypothesis(String),
    #[error("search bound exhausted: {0}")]
    SearchExhausted(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

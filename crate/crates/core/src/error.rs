use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {rank} is out of range for type {family}: {bound}")]
    RankOutOfRange {
        family: char,
        rank: usize,
        bound: String,
    },
    #[error("index {index} is out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("size {size} exceeds the configured cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("not a minimal hesitant lambda-walk witness: {0}")]
    NotMinimalWitness(String),
    #[error("not a hesitant lambda-walk: {0}")]
    NotAWitness(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(index: usize, bound: usize) -> Result<()> {
    if index == 0 || index > bound {
        Err(Error::IndexOutOfRange { index, bound })
    } else {
        Ok(())
    }
}

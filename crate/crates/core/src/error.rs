use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid chain character {ch:?} at position {pos}")]
    InvalidLabel { ch: char, pos: usize },
    #[error("chain must contain at least one node")]
    EmptyChain,
    #[error("closed chain length must be even and at least 4, got {0}")]
    BadClosedLength(usize),
    #[error("invalid direction character {ch:?} at position {pos}")]
    InvalidDirection { ch: char, pos: usize },
    #[error("folding has {got} steps, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("folding revisits a lattice point at node {node}")]
    SelfIntersection { node: usize },
    #[error("closed folding does not return to its start")]
    NotClosed,
    #[error("chain of length {len} exceeds the limit of {limit}")]
    TooLong { len: usize, limit: usize },
    #[error("parameter must be at least {min}, got {got}")]
    BadParameter { min: usize, got: usize },
    #[error("malformed lattice tree: {0}")]
    MalformedTree(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

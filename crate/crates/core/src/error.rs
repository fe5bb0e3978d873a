use thiserror::Error;

use crate::builder::BuildFailure;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid pair: {0}")]
    InvalidPair(String),
    #[error("swap index {index} out of range (last valid index {len})")]
    Index { index: usize, len: usize },
    #[error("domain must contain at least one order")]
    EmptyDomain,
    #[error("classification needs at least 3 alternatives, universe has {0}")]
    TooSmallUniverse(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed switch sequence at step {step}: {reason}")]
    MalformedSequence { step: usize, reason: String },
    #[error("alternative {0} never swaps in the examined suffix")]
    EmptySwapSet(u8),
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error("could not grow a domain with at least 2 orders after {0} attempts")]
    GenerationFailure(u64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("construction bug: {0}")]
    ConstructionBug(Box<BuildFailure>),
}

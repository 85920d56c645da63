use thiserror::Error;

use crate::words::WordError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DplError {
    #[error("curve {curve}: letter {letter} occurs {count} times (expected 4)")]
    WrongMultiplicity { curve: u32, letter: u32, count: usize },
    #[error("curve {curve}: occurrences of {other} in the {kind} cycle do not follow the side pattern")]
    BadSignPattern { curve: u32, other: u32, kind: &'static str },
    #[error("curve {curve}: no block decomposition ({reason})")]
    NoBlockDecomposition { curve: u32, reason: String },
    #[error("curve {curve}: rolling block {block} to position {position} gives no block of curve {target}")]
    RollMismatch { curve: u32, block: String, position: usize, target: u32 },
    #[error("arrangement is not simple")]
    NotSimple,
    #[error("restriction needs at least two indices")]
    SubsetTooSmall,
    #[error("genus {0} where genus one is required")]
    GenusNotOne(u32),
    #[error("at least {0} indices are required")]
    TooFewIndices(usize),
    #[error("carrier {carrier}: relation not total on {triple:?} (witness {witness:?})")]
    NotTotal { carrier: u32, triple: Vec<u32>, witness: Vec<u32> },
    #[error("carrier {carrier}: relation not transitive on {labels:?} (witness {witness:?})")]
    NotTransitive { carrier: u32, labels: Vec<u32>, witness: Vec<u32> },
    #[error("carrier {carrier}: block relation inconsistent ({reason})")]
    BlockInconsistent { carrier: u32, reason: String },
    #[error("no arrangement realizes the data ({0})")]
    NoArrangement(String),
    #[error("illegal mutation locus: {0}")]
    IllegalLocus(String),
    #[error("state limit {0} reached")]
    ResourceLimit(usize),
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("unknown index {0}")]
    UnknownIndex(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

pub type Result<T> = std::result::Result<T, DplError>;

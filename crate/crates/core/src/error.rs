use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partitions have different sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("invalid box move ({k1},{k2}): need 1 <= k1 < k2")]
    InvalidMove { k1: usize, k2: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("N = {width} is not admissible for {bipartition} (b = {b})")]
    NotAdmissible {
        bipartition: String,
        b: usize,
        width: usize,
    },

    #[error("{partition} is not a ({b},{width},{rank})-sympartition")]
    NotSympartition {
        partition: String,
        b: usize,
        width: usize,
        rank: usize,
    },

    #[error("{low} is not strictly dominated by {high}")]
    NotStrictlyDominated { low: String, high: String },

    #[error("{0} and {1} are not comparable")]
    NotComparable(String, String),

    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(String, String),

    #[error("adjacent pair {0} < {1} does not differ by a single box move")]
    NoSingleMove(String, String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid induction witness: {0}")]
    WitnessInvalid(String),

    #[error("bipartitions have different ranks ({left} vs {right})")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

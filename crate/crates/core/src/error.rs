use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Lie type `{0}`: {1}")]
    InvalidType(String, String),

    #[error("rank {rank} exceeds the supported maximum of {max}")]
    RankTooLarge { rank: usize, max: usize },

    #[error("empty list of components")]
    EmptyDatum,

    #[error("weight has {got} coordinates but the datum has rank {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid weight `{0}`: {1}")]
    InvalidWeight(String, String),

    #[error("scaling factor must be a positive integer")]
    ZeroScale,

    #[error("weights have different degrees ({0} vs {1})")]
    UnequalDegrees(String, String),

    #[error("{0}")]
    Precondition(String),

    #[error("{0} is a perfect square")]
    PerfectSquare(u64),

    #[error("malformed record: {0}")]
    Record(String),

    /// An algebraic identity that must hold did not. Points at corrupted
    /// tables or an arithmetic bug, never at bad user input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

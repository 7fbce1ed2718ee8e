use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sieve limit must be at least 2, got {0}")]
    InvalidSieveLimit(u64),

    #[error("sieve covers only {limit} but {needed} is required")]
    SieveTooSmall { needed: u64, limit: u64 },

    #[error("{value} is not prime ({context})")]
    NotPrime { value: u64, context: &'static str },

    #[error("partition argument {m} exceeds the configured bound {bound}")]
    PartitionTooLarge { m: u64, bound: u64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid prime graph: {0}")]
    InvalidGraph(String),

    #[error("edge sets of GK graphs for n = {n} are not materialized (threshold {threshold}); use the degree-pattern path")]
    GraphTooLarge { n: u64, threshold: u64 },

    #[error("product has more than one factor above the materialization threshold {threshold}")]
    ProductTooLarge { threshold: u64 },

    #[error("oracle range is capped at n = {max}, got {n}")]
    OracleRangeExceeded { n: u64, max: u64 },

    #[error("alpha must lie in 1..={max}, got {alpha}")]
    AlphaOutOfRange { alpha: u32, max: u32 },

    #[error("alpha = {alpha} does not satisfy the hypothesis: {reason}")]
    NonQualifying { alpha: u32, reason: String },

    #[error("{0}")]
    Parse(#[from] crate::descriptors::ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;

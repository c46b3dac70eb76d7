use std::io;

use thiserror::Error;

use crate::engine::HurwitzKey;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    /// A key with no simple branch points that neither the engine nor the
    /// configured provider can evaluate.
    #[error("base case unavailable for {0}")]
    BaseCaseUnavailable(HurwitzKey),

    #[error("enumeration bound exceeded: {visited} nodes visited, limit {limit}")]
    BoundExceeded { visited: u64, limit: u64 },

    #[error("enumeration degree {degree} exceeds ceiling {ceiling}")]
    DegreeTooLarge { degree: u32, ceiling: u32 },

    #[error("cache line {line}: {reason}")]
    Cache { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

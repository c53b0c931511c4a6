use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("symbol {value} at position {position} is outside the alphabet")]
    SymbolOutOfRange { position: usize, value: u64 },
    #[error("cannot parse word at position {position}: {reason}")]
    Parse { position: usize, reason: String },
    #[error("word lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("alphabet sizes differ ({left} vs {right})")]
    AlphabetMismatch { left: u32, right: u32 },
    #[error("invalid k = {k}: {reason}")]
    InvalidK { k: usize, reason: &'static str },
    #[error("table index (q={q}, m={m}, c={c}) is out of range")]
    IndexOutOfRange { q: usize, m: usize, c: usize },
    #[error("rank {rank} is out of range for a set of size {size}")]
    RankOutOfRange { rank: BigUint, size: BigUint },
    #[error("the set of universal words is empty")]
    EmptySet,
    #[error("brute-force guard exceeded: {what} would need {size} candidates (limit {limit})")]
    GuardExceeded {
        what: &'static str,
        size: String,
        limit: u64,
    },
}

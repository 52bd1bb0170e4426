//! Solution concepts for cooperative games with transferable utility.
//!
//! The crate models TU games over dense coalition tables (bitmask-indexed),
//! computes classical values (Shapley, Banzhaf, equal division, equal
//! surplus division), a family of per-capita values built around players
//! that are necessary for any worth to exist, and their counterparts for
//! games with a coalition structure (Owen, Banzhaf–Owen and the coalitional
//! per-capita family). An audit layer mechanically checks the axioms each
//! value is characterized by on seeded random games.
//!
//! With the default `parallel` feature, per-player loops on large games and
//! audit trials run on a rayon pool; results are identical to the
//! sequential fallback because each individual accumulation stays in
//! ascending coalition order.

mod coalition;
mod game;
mod partition;

pub mod audit;
pub mod values;

pub(crate) mod par;

pub use coalition::{Coalition, Players, Subsets};
pub use game::{Game, MAX_PLAYERS};
pub use partition::{CSGame, Partition};
pub use values::{Allocation, CoalitionalValue, PointValue, ValueKind};

use thiserror::Error;

/// Errors raised when constructing or transforming games.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GameError {
    #[error("player count must be between 1 and {MAX_PLAYERS}, got {0}")]
    PlayerCount(usize),
    #[error("coalition mask {mask:#b} uses players outside 0..{n}")]
    CoalitionOutOfRange { mask: u64, n: usize },
    #[error("duplicate coalition {0:#b}")]
    DuplicateCoalition(u64),
    #[error("the empty coalition is worth 0 by definition, got {0}")]
    NonzeroEmptyCoalition(f64),
    #[error("worth of coalition {mask:#b} is not finite")]
    NonFiniteWorth { mask: u64 },
    #[error("value table must have {expected} entries, got {got}")]
    ValueTableLength { expected: usize, got: usize },
    #[error("expected {expected} per-player entries, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("basis coalition must be non-empty")]
    EmptyBasisCoalition,
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("players must be distinct, got {0} twice")]
    SamePlayer(usize),
    #[error("unions must be distinct, got {0} twice")]
    SameUnion(usize),
    #[error("union {0} is empty")]
    EmptyUnion(usize),
    #[error("union {0} overlaps an earlier union")]
    OverlappingUnions(usize),
    #[error("partition does not cover players {missing:#b}")]
    IncompletePartition { missing: u64 },
    #[error("player counts differ: {left} vs {right}")]
    PlayerCountMismatch { left: usize, right: usize },
    #[error("exhaustive oracle supports at most {max} players, got {got}")]
    OracleTooLarge { got: usize, max: usize },
}

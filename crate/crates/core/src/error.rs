use thiserror::Error;

use crate::faceset::Face;

/// Errors raised by the longface library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient rank {rank} outside the supported range {min}..={max}")]
    RankOutOfRange { rank: usize, min: usize, max: usize },

    #[error("element {element} does not lie in [{rank}]")]
    ElementOutOfRange { element: usize, rank: usize },

    #[error("face {bottom} is not contained in face {top}")]
    NotSubset { bottom: Face, top: Face },

    #[error("ambient ranks differ: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("operation requires a non-empty face system")]
    EmptySystem,

    #[error("{what} = {value} exceeds the supported limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("face system is not a relative simplicial complex")]
    NotRelativeComplex,

    #[error("face system is not a simplicial complex")]
    NotComplex,

    #[error("size {size} exceeds ambient rank {rank}")]
    SizeExceedsRank { size: usize, rank: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("vector length {found} does not match expected length {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("exact inverse is not integral")]
    NonIntegral,

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate face {0}")]
    DuplicateFace(Face),

    #[error("intervals overlap in face {0}")]
    OverlappingIntervals(Face),

    #[error("malformed profile: {0}")]
    MalformedProfile(String),

    #[error("partition search exceeded its budget of {0} nodes")]
    SearchBudgetExceeded(u64),

    #[error("system has {faces} faces; exhaustive search is limited to {limit}")]
    SearchTooLarge { faces: usize, limit: usize },

    #[error("rank {n} is not admissible (eta = {eta}, size = {size})")]
    InadmissibleRank { n: usize, eta: usize, size: usize },

    #[error("face system is not a Dehn-Sommerville system")]
    NotDsSystem,

    #[error("n_max = {n_max} is below eta = {eta}")]
    NMaxBelowEta { n_max: usize, eta: usize },

    #[error("density {num}/{den} is not in [0, 1]")]
    InvalidDensity { num: u64, den: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

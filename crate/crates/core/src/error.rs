use thiserror::Error;

use crate::triple::Violation;

/// Which of the two vanishing sequences an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Y,
    Z,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Y => write!(f, "aY"),
            Side::Z => write!(f, "aZ"),
        }
    }
}

/// Rejection reasons for a candidate vanishing-sequence pair.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("rank/degree out of range: r = {r}, d = {d} (need 0 <= r <= d)")]
    InvalidRank { r: i64, d: i64 },
    #[error("degree {d} exceeds the supported maximum {max}")]
    DegreeTooLarge { d: i64, max: i64 },
    #[error("{side} has length {actual}, expected r + 1 = {expected}")]
    LengthMismatch {
        side: Side,
        expected: usize,
        actual: usize,
    },
    #[error("{side} is not strictly increasing at index {index}")]
    NotStrictlyIncreasing { side: Side, index: usize },
    #[error("{side}[{index}] lies outside [0, d]")]
    OutOfRange { side: Side, index: usize },
    #[error("A3 violation at i = {i}: aY[i] + aZ[r-i] < d")]
    A3Violation { i: usize },
    #[error("index i = {i} out of range (r = {r})")]
    IndexOutOfRange { i: usize, r: i64 },
}

/// Which sequence of a triple a length error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleField {
    BetaY,
    BetaZ,
    Eps,
}

impl std::fmt::Display for TripleField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TripleField::BetaY => write!(f, "betaY"),
            TripleField::BetaZ => write!(f, "betaZ"),
            TripleField::Eps => write!(f, "eps"),
        }
    }
}

/// Errors from operations that require an admissible triple.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleError {
    #[error("{field} has length {actual}, expected {expected}")]
    LengthMismatch {
        field: TripleField,
        expected: usize,
        actual: usize,
    },
    #[error("triple is not admissible ({} violation(s), first: {:?})", violations.len(), violations.first())]
    NotAdmissible { violations: Vec<Violation> },
}

/// Errors from the optimal-triple construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("pair is not connected at i = {i}")]
    NotConnectedAt { i: usize },
    #[error("pair is not connected")]
    NotConnected,
    #[error(transparent)]
    Pair(#[from] PairError),
}

/// Errors from enumeration and verification sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("invalid range: r = {r}, d = {d} (need 0 <= r <= d)")]
    InvalidRange { r: i64, d: i64 },
}

/// Errors from stratum classification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("the genus-zero nonemptiness policy requires g = 0, got g = {g}")]
    GenusZeroPolicy { g: i64 },
}

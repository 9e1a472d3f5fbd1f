use thiserror::Error;

use crate::pattern::PatternName;

pub type Result<T> = std::result::Result<T, Error>;

/// Why a block list failed to be a Steiner triple system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StsDefect {
    /// The point count is not 1 or 3 mod 6.
    Order(usize),
    /// A block mentions a point outside `1..=m`.
    PointOutOfRange { block: usize, point: usize },
    /// A block repeats a point.
    DegenerateBlock { block: usize },
    /// The pair is covered by two blocks (1-based points).
    DoublyCovered(usize, usize),
    /// The pair is not covered by any block (1-based points).
    Uncovered(usize, usize),
}

impl std::fmt::Display for StsDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StsDefect::Order(m) => write!(f, "order {m} is not 1 or 3 mod 6"),
            StsDefect::PointOutOfRange { block, point } => {
                write!(f, "block {block} uses point {point} outside the point set")
            }
            StsDefect::DegenerateBlock { block } => write!(f, "block {block} repeats a point"),
            StsDefect::DoublyCovered(a, b) => write!(f, "pair {a} {b} lies in two blocks"),
            StsDefect::Uncovered(a, b) => write!(f, "pair {a} {b} lies in no block"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid vertex {vertex} for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("duplicate vertex {0} in vertex list")]
    DuplicateVertex(usize),
    #[error("graph on {0} vertices exceeds the supported maximum")]
    GraphTooLarge(usize),
    #[error("isomorphism test limited to 8 vertices, got {0}")]
    TooLarge(usize),
    #[error("label count {labels} does not match vertex count {n}")]
    LabelMismatch { labels: usize, n: usize },

    #[error("graph is not strongly regular")]
    NotSrg,
    #[error("parameters ({n},{k},{lambda},{mu}) violate the strongly regular invariants")]
    InfeasibleParams { n: i64, k: i64, lambda: i64, mu: i64 },
    #[error("complement of ({n},{k},{lambda},{mu}) has a negative component")]
    InfeasibleResult { n: i64, k: i64, lambda: i64, mu: i64 },

    #[error("bad order: {0}")]
    BadOrder(String),
    #[error("bad index {0}")]
    BadIndex(usize),
    #[error("{pattern} requires order at least {threshold}, got {m}")]
    BelowThreshold { pattern: PatternName, m: usize, threshold: usize },
    #[error("input is imprimitive; an induced P4 cannot exist")]
    ImprimitiveInput,
    #[error("proof step failed: {0}")]
    ProofViolation(String),

    #[error("not a Latin square: {0}")]
    NotLatin(String),
    #[error("ragged Latin square text at line {line}")]
    Ragged { line: usize },
    #[error("squares are not orthogonal: pair ({0},{1}) repeats")]
    NotOrthogonal(usize, usize),
    #[error("not a Steiner triple system: {0}")]
    NotSts(StsDefect),
    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("search exceeded its time budget")]
    TimedOut,
}

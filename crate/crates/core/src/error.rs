use thiserror::Error;

use crate::subset::SubsetMask;

/// Problems reading the matrix or presentation text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input contains no matrix rows")]
    Empty,
    #[error("line {line}: expected {expected} columns, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: token `{token}` is not 0 or 1")]
    NonBinaryToken { line: usize, token: String },
    #[error("{columns} columns exceed the 64-element ground set limit")]
    TooManyColumns { columns: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("set {set} is not contained in a ground set of {n} elements")]
    OutOfGroundSet { set: SubsetMask, n: usize },

    #[error("{what} exceeds the supported bound of {limit}")]
    BoundExceeded { what: &'static str, limit: usize },

    #[error("enumeration guard tripped after {visited} flats")]
    EnumerationGuard { visited: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("matroid has rank 0")]
    RankZero,

    #[error("matroid is degenerate (has loops or isthmuses)")]
    Degenerate,

    #[error("invalid rank function: {0}")]
    InvalidRankFunction(String),

    #[error("cyclic-flat presentation violates axiom {axiom}: {detail}")]
    AxiomViolation { axiom: crate::zlattice::Axiom, detail: String },

    #[error("classification violated: {0}")]
    ClassificationViolated(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

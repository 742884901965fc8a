use thiserror::Error;

use crate::field::FieldTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("cannot demote {from} values to the {to} field")]
    FieldDemotion { from: FieldTag, to: FieldTag },

    #[error("recurrence coefficient alpha[{0}] is zero")]
    ZeroAlpha(usize),

    #[error("recurrence arrays have inconsistent lengths")]
    RecurrenceLength,

    #[error("nodes {first} and {second} coincide")]
    DuplicateNodes { first: usize, second: usize },

    #[error("node {0} has confluency zero")]
    ZeroConfluency(usize),

    #[error("confluency list has {found} entries for {expected} nodes")]
    ConfluencyLength { expected: usize, found: usize },

    #[error("basis requires at least one node")]
    EmptyNodes,

    #[error("expected simple (confluency 1) nodes")]
    ConfluentNodes,

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not nilpotent within {0} steps")]
    NotNilpotent(usize),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("series has zero constant term and cannot be inverted")]
    NonInvertibleSeries,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::grid::Node;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid shape {rows}x{cols}: both dimensions must be at least 1")]
    InvalidShape { rows: usize, cols: usize },

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error(
        "direction ({alpha}, {beta}) is not valid for the grid: nodes {first:?} and {second:?} \
         both project to {value}"
    )]
    DirectionCollision {
        alpha: String,
        beta: String,
        first: Node,
        second: Node,
        value: String,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("reference polynomial disagrees with the data at node {node:?}: expected {expected}, got {found}")]
    DataMismatch {
        node: Node,
        expected: String,
        found: String,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("forward differences need a non-empty sequence")]
    EmptySequence,

    #[error("node ({i}, {j}) lies outside the {m}x{n} grid")]
    IndexOutOfRange { i: usize, j: usize, m: usize, n: usize },

    #[error("malformed evaluation grid: {0}")]
    InvalidGrid(String),

    #[error("singular system")]
    Singular,

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for violations of a mathematical precondition, as opposed to
    /// malformed input or I/O failure.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::DirectionCollision { .. }
                | Error::ShapeMismatch(_)
                | Error::DataMismatch { .. }
                | Error::NonSquare { .. }
                | Error::IndexOutOfRange { .. }
                | Error::Singular
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

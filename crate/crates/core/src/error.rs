use thiserror::Error;

use crate::supermatrix::Axis;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    ZeroDimension { rows: usize, cols: usize },

    #[error("partition length must be positive")]
    EmptyAxis,

    #[error("cut {cut} is outside 1..={max} for an axis of length {length}")]
    CutOutOfRange {
        cut: usize,
        length: usize,
        max: usize,
    },

    #[error("cut {cut} appears more than once")]
    DuplicateCut { cut: usize },

    #[error("cuts must be strictly increasing, found {after} after {before}")]
    UnsortedCuts { before: usize, after: usize },

    #[error("entry count {found} does not match {rows}x{cols}")]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("partition mismatch: {0}")]
    PartitionMismatch(String),

    #[error("block ({i}, {j}) is outside the {row_blocks}x{col_blocks} block grid")]
    BlockIndexOutOfRange {
        i: usize,
        j: usize,
        row_blocks: usize,
        col_blocks: usize,
    },

    #[error("cannot concatenate along {axis}: {reason}")]
    Concat { axis: Axis, reason: String },

    #[error("a union needs at least one component")]
    EmptyUnion,

    #[error("arity mismatch: {left} components vs {right}")]
    ArityMismatch { left: usize, right: usize },

    /// A componentwise operation failed; `component` is 1-based.
    #[error("component {component}: {source}")]
    Component {
        component: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: row has {found} entries, expected {expected}")]
    RaggedRows {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: column cuts {found:?} differ from {expected:?} on earlier rows")]
    InconsistentCuts {
        line: usize,
        expected: Vec<usize>,
        found: Vec<usize>,
    },

    #[error("input contains no matrix")]
    EmptyInput,
}

impl Error {
    pub(crate) fn in_component(self, index: usize) -> Error {
        Error::Component {
            component: index + 1,
            source: Box::new(self),
        }
    }

    /// The innermost error, looking through component wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Component { source, .. } => source.root(),
            other => other,
        }
    }

    /// True for the operand-compatibility failures (shape, partition, arity).
    pub fn is_incompatibility(&self) -> bool {
        matches!(
            self.root(),
            Error::DimensionMismatch(_) | Error::PartitionMismatch(_) | Error::ArityMismatch { .. }
        )
    }
}

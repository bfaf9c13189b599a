use thiserror::Error;

/// Errors raised while constructing or transforming a [`BinaryMatrix`](crate::BinaryMatrix).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("entry at ({row}, {col}) is {value}, expected 0 or 1")]
    NotBinary { row: usize, col: usize, value: u8 },
    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {actual}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        actual: usize,
    },
    #[error("{axis} label list has length {actual}, expected {expected}")]
    LabelCount {
        axis: Axis,
        expected: usize,
        actual: usize,
    },
    #[error("duplicate {axis} label {label:?}")]
    DuplicateLabel { axis: Axis, label: String },
    #[error("column permutation is not a bijection on 0..{len}")]
    NotAPermutation { len: usize },
    #[error("matrix is not canonical: {0}")]
    NotCanonical(&'static str),
    #[error("row sum {value} at position {index} exceeds column count {cols}")]
    RowSumOutOfRange {
        index: usize,
        value: usize,
        cols: usize,
    },
    #[error("column length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("column sums are not non-increasing at position {0}")]
    NotNonIncreasing(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Column => f.write_str("column"),
        }
    }
}

/// Parse failure, always tied to a 1-based input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("cell {0:?} is not 0 or 1")]
    BadCell(String),
    #[error("duplicate {axis} label {label:?}")]
    DuplicateLabel { axis: Axis, label: String },
    #[error("row has {actual} cells, expected {expected}")]
    InconsistentRowLength { expected: usize, actual: usize },
    #[error("unknown {axis} label {label:?}")]
    UnknownLabel { axis: Axis, label: String },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(String, String),
    #[error("input is not valid UTF-8")]
    Encoding,
}

impl ParseErrorKind {
    /// Syntax problems (as opposed to a well-formed file describing an
    /// inconsistent matrix).
    pub fn is_syntax(&self) -> bool {
        matches!(
            self,
            ParseErrorKind::Malformed(_) | ParseErrorKind::BadCell(_) | ParseErrorKind::Encoding
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration needs {required} permutations, budget allows {allowed}")]
    BudgetExceeded { required: u128, allowed: u128 },
    #[error("a block of {size} columns exceeds the per-block cap of {cap}!")]
    BlockTooLarge { size: usize, cap: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("shift simulation stuck in row {row}: no movable 1 right of column {col}")]
    Stuck { row: usize, col: usize },
}

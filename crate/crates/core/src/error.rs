use std::path::PathBuf;

use thiserror::Error;

/// Failures while decoding a machine name or building a table.
///
/// Positions are zero-based offsets into the integer list.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum NameError {
    #[error("malformed integer {token:?} at position {position}")]
    MalformedInteger { position: usize, token: String },
    #[error("unbalanced parentheses")]
    UnbalancedParens,
    #[error("rule count {declared} does not match the {actual} listed pairs")]
    CountMismatch { declared: u64, actual: usize },
    #[error("rule index {index}{} out of range [0, {limit})", at(*position))]
    IndexOutOfRange {
        position: Option<usize>,
        index: u64,
        limit: usize,
    },
    #[error("action code {code}{} out of range [0, {limit})", at(*position))]
    CodeOutOfRange {
        position: Option<usize>,
        code: u64,
        limit: u32,
    },
    #[error("duplicate rule index {index} at position {position}")]
    DuplicateIndex { position: usize, index: u64 },
    #[error("rule index {index} at position {position} does not ascend (previous {previous})")]
    NotAscending {
        position: usize,
        index: u64,
        previous: u64,
    },
    #[error("table has {found} slots, expected {expected}")]
    TableSize { expected: usize, found: usize },
}

/// A bad line in a rule listing.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ListingError {
    pub line: usize,
    pub message: String,
}

fn at(position: Option<usize>) -> String {
    position.map(|p| format!(" at position {p}")).unwrap_or_default()
}

impl NameError {
    pub(crate) fn at(self, pos: usize) -> Self {
        match self {
            NameError::IndexOutOfRange { index, limit, .. } => NameError::IndexOutOfRange {
                position: Some(pos),
                index,
                limit,
            },
            NameError::CodeOutOfRange { code, limit, .. } => NameError::CodeOutOfRange {
                position: Some(pos),
                code,
                limit,
            },
            other => other,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RecombineError {
    #[error("recombination needs at least one source machine")]
    NoSources,
    #[error("{sources} sources need {} cut points, got {cuts}", sources - 1)]
    CutCount { sources: usize, cuts: usize },
    #[error("cut {cut} at position {position} is outside [0, {max}]")]
    CutOutOfRange { position: usize, cut: usize, max: usize },
    #[error("cut {cut} at position {position} is smaller than the previous cut {previous}")]
    CutsDecreasing {
        position: usize,
        cut: usize,
        previous: usize,
    },
    #[error("source {position} has {found} states, expected {expected}")]
    StateMismatch {
        position: usize,
        expected: u32,
        found: u32,
    },
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("enumeration does not fit in memory addressing")]
    TooLarge,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LineageError {
    #[error("unknown machine id {0:?}")]
    UnresolvedLeaf(String),
    #[error("malformed lineage at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error(transparent)]
    Recombine(#[from] RecombineError),
}

#[derive(Error, Debug)]
pub enum CatalogError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Name {
        line: usize,
        #[source]
        source: NameError,
    },
    #[error("line {line}: duplicate id {id:?}")]
    DuplicateId { line: usize, id: String },
    #[error("unknown machine id {0:?}")]
    UnknownId(String),
}

#[derive(Error, Debug)]
pub enum SearchError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Recombine(#[from] RecombineError),
    #[error("invalid search configuration: {0}")]
    Config(String),
    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Radó conversion and classification only apply to halted runs.
#[derive(Error, Debug, Clone, Copy, PartialEq, Eq)]
#[error("machine did not halt within {steps} steps")]
pub struct NotHalted {
    pub steps: u64,
}

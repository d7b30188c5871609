use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("matrix entry {value} at ({row}, {col}) is not reduced modulo {q}")]
    EntryNotReduced {
        row: usize,
        col: usize,
        value: u32,
        q: u32,
    },
    #[error("matrix has {found} columns, expected {expected}")]
    ColumnCountMismatch { expected: usize, found: usize },
    #[error("matrix has {found} rows, expected {expected}")]
    RowCountMismatch { expected: usize, found: usize },
    #[error("subspaces live in different ambient spaces (q={q1}, n={n1} vs q={q2}, n={n2})")]
    AmbientMismatch {
        q1: u32,
        n1: usize,
        q2: u32,
        n2: usize,
    },
    #[error("invalid type vector {dims:?} for n={n}")]
    InvalidTypeVector { dims: Vec<usize>, n: usize },
    #[error("rows 1..={rows} of the generator have rank below {rows} (subspace {index})")]
    RankDeficient { index: usize, rows: usize },
    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },
    #[error("flags or codes have different field, ambient dimension or type")]
    TypeMismatch,
    #[error("operation needs full flags")]
    NotFullFlag,
    #[error("a flag code needs at least one flag")]
    EmptyCode,
    #[error("operation needs a code with at least two flags")]
    SingletonCode,
    #[error("enumeration for n={n} exceeds the configured limit n<={limit}")]
    EnumerationLimitExceeded { n: usize, limit: usize },
    #[error("invalid distance path at index {index}: {reason}")]
    InvalidPath { index: usize, reason: String },
    #[error("no coordinate flag pair realizes the path {deltas:?}")]
    RealizationNotFound { deltas: Vec<usize> },
    #[error("cell (row {row}, position {pos}) lies outside FF({n})")]
    CellOutsideFrame { n: usize, row: usize, pos: usize },
    #[error("parts {0:?} do not form a partition")]
    NotAPartition(Vec<usize>),
    #[error("partition {parts:?} is not embedded in FF({n})")]
    NotEmbedded { parts: Vec<usize>, n: usize },
    #[error("invalid staircase profile {profile:?} for n={n}")]
    InvalidStaircase { profile: Vec<usize>, n: usize },
    #[error("partitions live in different frames FF({0}) and FF({1})")]
    FrameMismatch(usize, usize),
    #[error("rectangle offset k={k} out of range 0..={max}")]
    OffsetOutOfRange { k: usize, max: usize },
    #[error("{rows}x{cols} rectangle does not fit in FF({n})")]
    RectangleOutsideFrame { rows: usize, cols: usize, n: usize },
    #[error("consistency failure ({check}): {detail}")]
    TheoremViolation { check: String, detail: String },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("flag {flag} is invalid: {source}")]
    InvalidFlag {
        flag: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn violation(check: &str, detail: impl Into<String>) -> Self {
        Error::TheoremViolation {
            check: check.to_string(),
            detail: detail.into(),
        }
    }
}

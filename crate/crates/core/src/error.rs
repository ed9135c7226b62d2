use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCount { left: usize, right: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    Rank { expected: usize, found: usize },
    #[error("base mismatch: {0}")]
    Base(String),
    #[error("base must be a point, found dimension {0}")]
    NotAPoint(usize),
    #[error("subspace not closed under the bracket: [{i}, {j}] leaves the span")]
    NotClosed { i: usize, j: usize },
    #[error("invalid index set: {0}")]
    IndexSet(String),
    #[error("incompatible projections: {0}")]
    Incompatible(String),
    #[error("input not verified: {0}")]
    Unverified(String),
    #[error("invalid dimensions: {0}")]
    Dimensions(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

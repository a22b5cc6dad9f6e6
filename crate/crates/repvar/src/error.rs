use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the library. Input validation problems are kept apart
/// from the one structural failure mode that has its own exit status in the
/// CLI (asking the classifier to run on a cyclic quiver).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("quiver has an oriented cycle")]
    CyclicQuiver,

    #[error("component classification requires an acyclic quiver")]
    AcyclicRequired,

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("sequences with different dimension vectors are not comparable")]
    TotalMismatch,

    #[error("semisimple sequence is not realizable over this quiver")]
    NotRealizable,

    #[error("path is not critical for this skeleton")]
    NotCritical,

    #[error("no scalar assigned to symbol x{0}")]
    MissingScalar(usize),

    #[error("representation is not a module for truncation level {level}: paths of length {} act nontrivially", level + 1)]
    NotTruncated { level: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

use thiserror::Error;

use crate::genconj::ClassTag;

pub type Result<T> = std::result::Result<T, Error>;

/// Malformed-input errors. Well-formed inputs that are merely not realizable
/// never produce an error; they come back as a `NotRealizable` report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `index` is the 1-based position of the first ascent (`a[index-1] < a[index]`).
    #[error("sequence is not nonincreasing: entry {index} is larger than entry {}", index - 1)]
    NotNonincreasing { index: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("sequence is empty")]
    EmptySequence,

    #[error("entry {index} has magnitude {value}, above the supported limit {limit}")]
    EntryTooLarge { index: usize, value: i128, limit: u64 },

    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("multiplicity bound r must be at least 1 (got {0})")]
    InvalidR(u64),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("class {0} has no generalized conjugate")]
    UnsupportedClass(ClassTag),

    #[error("invalid structure mask{}: {reason}", location(*row, *col))]
    MaskInvalid {
        row: Option<usize>,
        col: Option<usize>,
        reason: String,
    },

    #[error("conjugate form unavailable: {0}")]
    ConjugateFormUnavailable(String),

    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
}

fn location(row: Option<usize>, col: Option<usize>) -> String {
    match (row, col) {
        (Some(r), Some(c)) => format!(" at row {r}, column {c}"),
        (Some(r), None) => format!(" at row {r}"),
        (None, Some(c)) => format!(" at column {c}"),
        (None, None) => String::new(),
    }
}

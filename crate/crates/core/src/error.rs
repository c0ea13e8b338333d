use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("segment [{lo},{hi}] is malformed: {reason}")]
    BadSegment {
        lo: String,
        hi: String,
        reason: &'static str,
    },

    #[error("operation `{0}` requires a non-empty segment")]
    EmptySegment(&'static str),

    #[error("reducibility point must be a positive half-integer, got {0}")]
    BadAlpha(String),

    #[error("opaque tempered symbol {0}: only the pair sum is defined")]
    OpaqueSymbol(String),

    #[error("precondition violated in {op}: {condition}")]
    Precondition { op: &'static str, condition: String },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("linear system for {0} is singular or inconsistent")]
    Singular(String),

    #[error("{0}")]
    Verification(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(op: &'static str, condition: impl Into<String>) -> Error {
    Error::Precondition {
        op,
        condition: condition.into(),
    }
}

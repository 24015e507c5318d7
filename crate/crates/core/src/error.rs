use thiserror::Error;

/// Errors raised by clutter construction, transformations and the checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("edges {{{smaller}}} and {{{larger}}} are comparable; a clutter needs an antichain")]
    Antichain { smaller: String, larger: String },

    #[error("duplicate edge {{{0}}}")]
    DuplicateEdge(String),

    #[error("edge is empty")]
    EmptyEdge,

    #[error("assignment produces the unit ideal (an edge became empty)")]
    UnitIdeal,

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex `{0}` lies in no edge")]
    IsolatedVertex(String),

    #[error("clutter is not uniform")]
    NotUniform,

    #[error("deleted and contracted sets overlap at `{0}`")]
    OverlappingMinor(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("instance too large for {what}: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("report format error: {0}")]
    Report(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

pub(crate) fn check_limit(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::TooLarge { what, size, limit })
    } else {
        Ok(())
    }
}

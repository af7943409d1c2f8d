use thiserror::Error;

/// Errors raised by the library and the command-line frontend.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A structure would exceed a configured size limit.
    #[error("size limit exceeded: {0}")]
    Size(String),

    /// Arguments that do not belong together (wrong degree, foreign element, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// Malformed input text.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    /// Well-formed input that does not describe a valid object.
    #[error("invalid input at line {line}: {message}")]
    Semantic { line: usize, message: String },

    /// An exhaustive search or closure hit its budget before finishing.
    #[error("budget exceeded: {what} (limit {limit})")]
    Budget { what: String, limit: u64 },

    /// The requested case is outside what the formulas cover.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A computed result contradicted an independent check.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn budget(what: impl Into<String>, limit: u64) -> Self {
        Error::Budget {
            what: what.into(),
            limit,
        }
    }
}

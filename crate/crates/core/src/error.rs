use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument was outside its domain (vertex out of range, bad color, ...).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// An operation was called on an input that violates its precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An enumeration or subdivision would exceed its configured bound.
    #[error("resource budget exceeded: {what} exceeds the limit of {limit}")]
    Budget { what: &'static str, limit: u64 },

    /// Malformed edge-list input.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A constructed object failed its own validation.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

use thiserror::Error;

/// Errors surfaced by the library.
///
/// `InvalidInput` covers precondition violations (out-of-range vertices,
/// size caps, malformed flags); `Parse` carries the byte offset of the
/// first offending byte in a graph file; `Internal` means an algorithm
/// produced a value that violates its own contract and indicates a bug
/// in this crate, not in the input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("internal invariant violation: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

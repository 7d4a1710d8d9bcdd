use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed tables or inconsistent dimensions.
    #[error("structural error: {0}")]
    Structural(String),
    /// An operation was called with arguments outside its domain.
    #[error("usage error: {0}")]
    Usage(String),
    /// A partition does not belong to the family an operation expects.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

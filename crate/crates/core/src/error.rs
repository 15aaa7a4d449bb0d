use thiserror::Error;

/// Errors raised by the library. Every variant carries a one-line diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("unsupported binding: {0}")]
    UnsupportedBinding(String),
    #[error("invalid fraction: {0}")]
    InvalidFraction(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("closure unavailable: {0}")]
    ClosureUnavailable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

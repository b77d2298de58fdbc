use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit class.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum RookError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("basis mismatch: {0}")]
    Basis(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {msg}")]
    Ingest { line: usize, msg: String },

    #[error("consistency failure: {0}")]
    Consistency(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for RookError {
    fn from(e: std::io::Error) -> Self {
        RookError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for RookError {
    fn from(e: serde_json::Error) -> Self {
        RookError::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, RookError>;

//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("at least {needed} points required, got {got}")]
    InsufficientPoints { needed: usize, got: usize },

    #[error("requested set is too large: {0}")]
    TooLarge(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("set is not degree-definite: {0}")]
    IndefiniteSet(String),

    #[error("series diverges: {0}")]
    Divergent(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

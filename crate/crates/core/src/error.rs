//! Error type shared across the crate.

use std::fmt;

/// Errors produced by kernel evaluation, closed-form evaluation, parsing,
/// and catalog lookups.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// An argument violated a precondition (precision too low, m = 0, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A value fell outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Closed-form evaluation failed (negative radicand, missing sign change, ...).
    #[error("evaluation error: {0}")]
    Eval(String),
    /// Catalog text could not be parsed.
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    /// A catalog or invariant-table lookup found nothing.
    #[error("not found: {0}")]
    NotFound(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl fmt::Display) -> Self {
        Error::Parse {
            offset,
            message: message.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

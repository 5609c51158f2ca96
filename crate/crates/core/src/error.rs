use thiserror::Error;

/// Errors raised by constructions whose inputs violate a structural precondition.
///
/// Failed *checks* are not errors: they come back as [`crate::checkers::Verdict`]s.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain/codomain mismatch: {0}")]
    Mismatch(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("diagram is not functorial: composites {from} -> {via} -> {to} disagree")]
    NonFunctorial { from: String, via: String, to: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("engine mismatch: expected {expected}, found {found}")]
    EngineMismatch { expected: String, found: String },

    #[error("not equivariant: {0}")]
    NotEquivariant(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn structural(msg: impl Into<String>) -> Error {
    Error::Structural(msg.into())
}

pub(crate) fn mismatch(msg: impl Into<String>) -> Error {
    Error::Mismatch(msg.into())
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

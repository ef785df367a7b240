use thiserror::Error;

/// Errors raised by the library.
///
/// The variants fall into three classes (see [`Error::class`]) so that front
/// ends can tell a bad invocation from bad input data from a broken
/// mathematical invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("step {step}: {message}")]
    Audit { step: usize, message: String },
    #[error("{0}")]
    Io(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Usage,
    Input,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::InvalidArgument(_) => ErrorClass::Usage,
            Error::Parse { .. } | Error::Audit { .. } | Error::Io(_) => ErrorClass::Input,
            Error::DimensionMismatch(_) | Error::Consistency(_) => ErrorClass::Internal,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

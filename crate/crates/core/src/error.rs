use thiserror::Error;

/// Errors raised across the library.
///
/// `Domain` and `Unsupported` are caller mistakes. `Internal` and
/// `NotRational` mean an arithmetic invariant broke and should never be seen
/// on well-formed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SieveError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("value in Z[zeta_{order}] is not rational: coordinates {coeffs:?}")]
    NotRational { order: u32, coeffs: Vec<String> },
}

pub type Result<T> = std::result::Result<T, SieveError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(SieveError::Domain(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(SieveError::Internal(msg.into()))
}

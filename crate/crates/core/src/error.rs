use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: broken invariant, bad shape, out-of-range parameter.
    #[error("validation error: {0}")]
    Validation(String),

    /// Input is well formed but the quantity is undefined there.
    #[error("domain error: {0}")]
    Domain(String),

    /// Bad request from a caller, e.g. an unknown column name.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("sweep aborted at {axis} = {value}: {source}")]
    AtPoint {
        axis: &'static str,
        value: f64,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 2 usage/validation, 3 domain, 4 I/O, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) | Error::Usage(_) => 2,
            Error::Domain(_) => 3,
            Error::Io { .. } => 4,
            Error::Internal(_) => 1,
            Error::AtPoint { source, .. } => source.exit_code(),
        }
    }
}

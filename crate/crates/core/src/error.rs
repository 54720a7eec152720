use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument violated an operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A dense oracle matrix was requested beyond the supported size.
    #[error("level {m} exceeds the dense oracle capacity (max {max})")]
    Capacity { m: u32, max: u32 },

    /// Matrices or permutations did not have the structure required.
    #[error("structure error: {0}")]
    Structure(String),

    /// Orthonormal scaling was requested on an exact-integer payload.
    #[error("orthonormal scaling requires a floating-point payload")]
    UnsupportedMode,

    #[error("{path}: {msg}")]
    Format { path: PathBuf, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization error: {0}")]
    Serialization(String),

    #[error("worker pool: {0}")]
    Resource(String),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }
}

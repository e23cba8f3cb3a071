use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Training produced a non-finite or runaway loss; carries the step index.
    #[error("training diverged at step {step}: loss = {loss}")]
    DivergedTraining { step: usize, loss: f64 },

    /// A replayed checkpoint segment did not reproduce the stored checkpoint.
    #[error("internal consistency: {0}")]
    InternalConsistency(String),

    /// Corrupt or mismatched serialized container.
    #[error("integrity: {0}")]
    Integrity(String),

    #[error("fit failed: {0}")]
    FitFailed(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] superlab_core::Error),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("algebra JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("suite manifest: {0}")]
    Manifest(String),

    /// Bad command-line input.
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

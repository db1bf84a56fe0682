use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("non-finite value encountered: {0}")]
    NonFinite(String),
    #[error("malformed field file: {0}")]
    MalformedFile(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("unknown experiment '{0}'")]
    UnknownExperiment(String),
    #[error("solver blow-up at time step {step}: {detail}")]
    BlowUp { step: usize, detail: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no stable candidate; all evolutions blew up")]
    NoStableCandidate,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

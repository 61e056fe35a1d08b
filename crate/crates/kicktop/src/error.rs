use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    /// Bad configuration, flags or input data.
    #[error("{0}")]
    Validation(String),

    #[error(transparent)]
    Core(#[from] kicktop_core::Error),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("output: {0}")]
    Output(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type AppResult<T> = Result<T, AppError>;

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::VerificationFailed(_) => 2,
            _ => 1,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        AppError::Io { path: path.into(), source }
    }
}

impl From<csv::Error> for AppError {
    fn from(e: csv::Error) -> Self {
        AppError::Output(e.to_string())
    }
}

impl From<serde_json::Error> for AppError {
    fn from(e: serde_json::Error) -> Self {
        AppError::Output(e.to_string())
    }
}

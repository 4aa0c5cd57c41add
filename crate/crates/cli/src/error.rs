use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] closedpack::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        use closedpack::Error;
        ExitCode::from(match self {
            CliError::Core(Error::CapExceeded { .. }) => 3,
            CliError::Core(_) | CliError::Json(_) | CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Pool(_) => 4,
        })
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

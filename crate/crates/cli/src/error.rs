use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] rcm_core::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Core(rcm_core::Error::BudgetExceeded { .. }) => 4,
            CliError::Core(rcm_core::Error::Inconsistency(_)) | CliError::Failed(_) => 1,
            CliError::Core(_) => 5,
        }
    }

    pub fn stdout(source: std::io::Error) -> Self {
        CliError::Io {
            path: String::from("<stdout>"),
            source,
        }
    }
}

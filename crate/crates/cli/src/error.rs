use stackycovers_core::ClassifyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("{0} discrepancies found")]
    Discrepancy(usize),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Discrepancy(_) => 1,
            CliError::Classify(ClassifyError::CapExceeded { .. }) => 3,
            CliError::Usage(_) | CliError::Classify(_) => 2,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 2,
        }
    }
}

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown scenario `{0}` (see `reductionlab list`)")]
    UnknownScenario(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("scenario `{scenario}` failed: {source}")]
    Scenario {
        scenario: String,
        #[source]
        source: reductionlab::Error,
    },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialisation error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Process exit status: 2 for unusable input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownScenario(_) | CliError::Config(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

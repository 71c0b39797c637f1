use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("bad configuration: {0}")]
    Config(String),
    #[error("io failure: {0}")]
    Io(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Limit(_) => 3,
        }
    }
}

impl From<gminor_core::Error> for CliError {
    fn from(e: gminor_core::Error) -> Self {
        match e {
            gminor_core::Error::TooLarge { .. } => CliError::Limit(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Config(format!("invalid JSON: {e}"))
    }
}

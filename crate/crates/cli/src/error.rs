use thiserror::Error;

/// Anything that stops a command before a verdict is reached. All of these
/// map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("malformed JSON in {what} at line {line}, column {column}: {message}")]
    Json { what: String, line: usize, column: usize, message: String },
    #[error("invalid {what}: {message}")]
    Input { what: String, message: String },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] nilhecke_core::Error),
}

impl CliError {
    pub fn json(what: &str, err: &serde_json::Error) -> Self {
        let message = err.to_string();
        // serde_json appends " at line L column C"; the position is reported separately.
        let message = match message.rfind(" at line ") {
            Some(k) => message[..k].to_string(),
            None => message,
        };
        CliError::Json { what: what.to_string(), line: err.line(), column: err.column(), message }
    }

    pub fn input(what: &str, message: impl Into<String>) -> Self {
        CliError::Input { what: what.to_string(), message: message.into() }
    }
}

pub type CliResult<T> = Result<T, CliError>;

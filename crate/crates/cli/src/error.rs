use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kirillov::Error),

    #[error("{what}: invalid JSON at line {line}, column {column}: {message}")]
    Json { what: String, line: usize, column: usize, message: String },

    #[error("missing input {0:?}")]
    MissingInput(String),

    #[error("invalid value for {field}: {message}")]
    InvalidInput { field: String, message: String },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("unknown golden case set {name:?}; expected one of {known}")]
    UnknownCaseSet { name: String, known: String },

    #[error("unknown command {0:?}")]
    UnknownCommand(String),
}

impl CliError {
    pub fn json(what: &str, err: serde_json::Error) -> Self {
        CliError::Json { what: what.to_string(), line: err.line(), column: err.column(), message: err.to_string() }
    }

    pub fn invalid(field: &str, message: impl Into<String>) -> Self {
        CliError::InvalidInput { field: field.to_string(), message: message.into() }
    }
}

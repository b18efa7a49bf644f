use thiserror::Error;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    /// A check-style command answered "no".
    Negative = 1,
    InputError = 2,
    InternalError = 3,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse { line, message: message.into() }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Input(_) | CliError::Parse { .. } => ExitCode::InputError,
            CliError::Internal(_) => ExitCode::InternalError,
        }
    }
}

impl From<ultragraph_core::Error> for CliError {
    fn from(e: ultragraph_core::Error) -> Self {
        match e {
            ultragraph_core::Error::Internal(m) => CliError::Internal(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

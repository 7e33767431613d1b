use std::fmt;

/// Exit code for bad flags, parameters or I/O problems.
pub const EXIT_USAGE: i32 = 1;
/// Exit code when `verify` finds a disagreement.
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Self { code: EXIT_VERIFY_FAILED, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        Self::usage(format!("i/o error: {err}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        Self::usage(format!("csv error: {err}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        Self::usage(format!("json error: {err}"))
    }
}

impl From<dirac_tensor::Error> for CliError {
    fn from(err: dirac_tensor::Error) -> Self {
        Self::usage(err.to_string())
    }
}

use thiserror::Error;

/// Exit code for a run where every instance passed.
pub const EXIT_PASS: i32 = 0;
/// Exit code when at least one verification failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for malformed input, invalid shapes and unmet preconditions.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Validation(String),

    #[error(transparent)]
    Geometry(#[from] shapecalc::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }
}

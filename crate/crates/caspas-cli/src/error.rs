//! CLI error type and its mapping onto process exit codes.

use std::path::PathBuf;

use caspas_core::{
    AnalysisError, ConfigError, MeasureError, PipelineError, ProblemError, TopsisError,
};
use thiserror::Error;

/// Exit code for malformed input: unreadable files, invalid JSON, schema or
/// parameter violations. Matches the code clap uses for usage errors.
pub const INPUT_ERROR: u8 = 2;

/// Exit code for computations that fail on well-formed input (for example a
/// validity check whose preconditions do not hold).
pub const COMPUTE_ERROR: u8 = 3;

/// Everything that can go wrong after argument parsing.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write `{path}`: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    /// Invalid JSON; the source error carries line and column.
    #[error("`{path}` is not valid JSON: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    /// Structurally valid JSON that does not describe a coherent problem.
    #[error("invalid problem file: {0}")]
    Schema(String),
    #[error("invalid problem: {0}")]
    Problem(#[from] ProblemError),
    #[error("invalid parameter: {0}")]
    Config(#[from] ConfigError),
    #[error("invalid measure input: {0}")]
    Measure(#[from] MeasureError),
    #[error("invalid TOPSIS parameter: {0}")]
    Topsis(#[from] TopsisError),
    #[error(
        "invalid grid `{0}`: expected `start:end:step` with 0 <= start <= end <= 1 and step > 0"
    )]
    Grid(String),
    #[error("CSV output is not available for this command; use --format json")]
    CsvUnavailable,
    #[error("cannot encode output: {0}")]
    Encode(#[from] serde_json::Error),
    #[error("cannot render CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

impl CliError {
    /// [`INPUT_ERROR`] for anything wrong with what the user supplied,
    /// [`COMPUTE_ERROR`] for failures of the computation itself.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Read { .. }
            | CliError::Write { .. }
            | CliError::Json { .. }
            | CliError::Schema(_)
            | CliError::Problem(_)
            | CliError::Config(_)
            | CliError::Measure(_)
            | CliError::Topsis(_)
            | CliError::Grid(_)
            | CliError::CsvUnavailable => INPUT_ERROR,
            CliError::Encode(_)
            | CliError::Csv(_)
            | CliError::Pipeline(_)
            | CliError::Analysis(_) => COMPUTE_ERROR,
        }
    }
}

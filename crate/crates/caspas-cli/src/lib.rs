//! Command-line front end for the disc intuitionistic fuzzy decision
//! engine: solve, sweep, compare, validate, and inspect fuzzy measures.

pub mod commands;
pub mod error;
pub mod output;
pub mod problem;

pub use commands::{run, Cli};
pub use error::{CliError, COMPUTE_ERROR, INPUT_ERROR};

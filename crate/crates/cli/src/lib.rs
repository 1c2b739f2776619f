//! Command-line front end for `subsums-core`.

pub mod args;
pub mod bfile;
pub mod cache;
pub mod commands;
pub mod error;
pub mod report;

pub use args::Cli;
pub use commands::{run, Outcome};
pub use error::{CliError, CliResult, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

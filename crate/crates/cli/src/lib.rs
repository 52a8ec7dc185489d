//! Command-line driver: flag validation, subcommands, the acceptance suite
//! and the JSON report.

pub mod commands;
pub mod options;
pub mod report;
pub mod suite;

pub use commands::{run, Command};
pub use options::{CliError, Options};
pub use report::{Record, Report, Status};

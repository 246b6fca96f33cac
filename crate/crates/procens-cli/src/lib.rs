//! Batch command-line front end: parses a run configuration, executes one
//! library operation, and prints a machine-readable report (csv, json or a
//! human table).

pub mod config;
pub mod notation;
pub mod report;
pub mod run;

pub use config::{ModeKind, OutputFormat, Settings};
pub use notation::{format_scheme_notation, parse_scheme_notation};
pub use run::{run, CliError, CommandKind};

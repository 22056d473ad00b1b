//! Library side of the `isocurv` binary.

pub mod args;
pub mod commands;
pub mod export;
pub mod report;

pub use args::Cli;
pub use report::Report;

/// Runs the parsed command. Errors become a report with an `error` field.
pub fn execute(cli: &Cli) -> Report {
    commands::run(&cli.command).unwrap_or_else(|e| Report::failed(cli.command.name(), &e))
}

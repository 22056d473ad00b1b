use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use isocurv_cli::{execute, Cli};

fn main() -> ExitCode {
    // clap reports usage errors itself and exits with status 2.
    let cli = Cli::parse();
    let report = execute(&cli);
    if let Some(e) = &report.error {
        eprintln!("error: {}", e.message);
    }
    let mut out = io::stdout().lock();
    match writeln!(out, "{}", report.to_json()).and_then(|()| out.flush()) {
        Ok(()) => {}
        // A closed pipe (e.g. `| head`) is the reader's choice, not a failure.
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
        Err(e) => {
            eprintln!("error: cannot write report: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}

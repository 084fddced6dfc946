//! Exit codes: 0 success, 2 usage error, 3 mathematical contract violation
//! or failed verification, 4 internal panic.

use std::io::Write;
use std::panic;
use std::process::ExitCode;

use betapoly::args::Cli;
use betapoly::{run, JobError};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let spec = match cli.into_spec() {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let outcome = panic::catch_unwind(|| run(&spec));
    let mut stdout = std::io::stdout().lock();
    match outcome {
        Ok(Ok(doc)) => {
            let _ = stdout.write_all(doc.as_bytes());
            ExitCode::SUCCESS
        }
        Ok(Err(JobError::Failed(doc))) => {
            let _ = stdout.write_all(doc.as_bytes());
            eprintln!("error: verification failed");
            ExitCode::from(3)
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(_) => {
            eprintln!("error: internal assertion failure");
            ExitCode::from(4)
        }
    }
}

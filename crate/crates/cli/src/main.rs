use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qpart_cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.stdout().as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            if outcome.exit_code != 0 {
                eprintln!("qpart: cross-check failed");
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("qpart: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}

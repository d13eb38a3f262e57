use std::io::Write;
use std::process::ExitCode;

use chromabij::Budget;
use chromabij_cli::commands::{run, Cli};
use chromabij_cli::CliError;
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = Budget::from_env()
        .map_err(CliError::from)
        .and_then(|budget| run(&cli.command, &budget));
    match outcome {
        Ok(out) => {
            // Ignore EPIPE from `| head`.
            let _ = writeln!(std::io::stdout().lock(), "{}", out.render(cli.pretty));
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::process::ExitCode;

use clap::Parser;
use qcurv_cli::{run, Command, Options};

/// Exact and numeric verification of the constant-Q uniqueness identities.
#[derive(Parser)]
#[command(name = "qcurv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: Options,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(cli.command, &cli.options) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("qcurv: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    eprint!("{}", report.table());
    let json = report.to_json();
    match &cli.options.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, json) {
                eprintln!("qcurv: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{json}"),
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qpnkit::cli::{self, CliError, RunOptions};

#[derive(Parser)]
#[command(name = "qpnkit", version, about = "Run .qpk verification scripts")]
struct Args {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script and print one JSON object per command.
    Run {
        script: PathBuf,
        /// Seed for randomized commands.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Default degree window LO:HI for exact and hilbert.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
}

fn usage(e: CliError) -> ExitCode {
    eprintln!("qpnkit: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Cmd::Run { script, seed, window } = args.command;
    if let Err(e) = cli::configure_threads() {
        return usage(e);
    }
    let window = match window.as_deref().map(cli::parse_window).transpose() {
        Ok(w) => w,
        Err(e) => return usage(e),
    };
    let text = match std::fs::read_to_string(&script) {
        Ok(t) => t,
        Err(e) => return usage(CliError::Usage(format!("{}: {e}", script.display()))),
    };
    let report = cli::run_source(&text, &RunOptions { seed, window });
    for line in &report.lines {
        println!("{line}");
    }
    ExitCode::from(report.exit_code as u8)
}

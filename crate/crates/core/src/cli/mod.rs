//! Script language for sessions: parsing, rendering and execution.
//!
//! Every command prints one JSON object per line. Exit code 0 means every
//! verdict passed, 1 means some verdict failed or a command raised an
//! error, 2 means the script could not be parsed or an input was invalid.

pub mod ast;
pub mod parse;
pub mod run;

use thiserror::Error;

pub use ast::SessionScript;
pub use parse::parse;
pub use run::{run, RunOptions, Report};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("line {line}, column {column}: expected {expected}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error("line {line}: '{name}' {detail}")]
    Name {
        line: usize,
        name: String,
        detail: String,
    },
    #[error("line {line}: {detail}")]
    Input {
        line: usize,
        detail: String,
        /// Offending matrix entry `(row, col)` when there is one.
        entry: Option<(usize, usize)>,
    },
    #[error("{0}")]
    Usage(String),
}

/// Parses and runs a script. Parse errors produce a single error line and
/// exit code 2.
pub fn run_source(text: &str, opts: &RunOptions) -> Report {
    match parse(text) {
        Ok(script) => run(&script, opts),
        Err(e) => Report {
            lines: vec![run::cli_error_line(&e)],
            exit_code: 2,
        },
    }
}

/// Parses `LO:HI`.
pub fn parse_window(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("window must look like LO:HI, got '{s}'"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Caps the global thread pool at `QPNKIT_THREADS` when it is set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("QPNKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("QPNKIT_THREADS must be a positive integer, got '{v}'")))?;
    // A pool that is already built keeps its size.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows() {
        assert_eq!(parse_window("-2:5"), Ok((-2, 5)));
        assert!(parse_window("5:2").is_err());
        assert!(parse_window("3").is_err());
    }
}

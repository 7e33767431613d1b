//! Command-line front end: spectrum tables, figure datasets, wavefunction
//! samples and the oracle verification sweep.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::Parser;

use args::{Cli, Command};
use config::{parse_config_text, RunConfig};
pub use error::{CliError, EXIT_USAGE, EXIT_VERIFY_FAILED};

/// Parse `argv` (program name first) and run the selected subcommand.
/// Tables go to `--out` or `stdout`; diagnostics go to `stderr`.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) if !err.use_stderr() => {
            // --help and --version
            write!(stdout, "{err}")?;
            return Ok(());
        }
        Err(err) => {
            let text = err.render().to_string();
            return Err(CliError::usage(text.trim_start_matches("error: ").trim_end()));
        }
    };
    let file = match &cli.command.common().config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
            Some(parse_config_text(&text)?)
        }
        None => None,
    };
    let cfg = RunConfig::resolve(cli.command.kind(), file, cli.command.settings())?;

    let (table, verdict) = match &cli.command {
        Command::Spectrum(_) => (commands::spectrum::run(&cfg)?, Ok(())),
        Command::Fig3(_) => (commands::fig3::run(&cfg)?, Ok(())),
        Command::Wavefunction(_) => (commands::wavefunction::run(&cfg)?, Ok(())),
        Command::Verify(_) => commands::verify::run(&cfg, stderr)?,
    };
    output::emit(&table, cfg.format, cfg.out.as_deref(), stdout)?;
    verdict
}

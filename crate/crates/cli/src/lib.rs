//! Command-line harness around `asmval-core`: the `exact`, `coeffs`,
//! `compare`, `figure` and `verify` subcommands and their CSV/JSON output.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod golden;
pub mod table;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command, Format};
pub use config::RunConfig;
pub use error::{CliError, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION};

use commands::CommandOutput;

/// Parses `args`, runs the command and returns the process exit code.
pub fn run_from_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdout, stderr),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{e}");
            EXIT_OK
        }
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            EXIT_USAGE
        }
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    match execute(cli, stdout) {
        Ok(out) => {
            for m in &out.messages {
                let _ = writeln!(stderr, "{m}");
            }
            match out.failure {
                Some(f) => {
                    let _ = writeln!(stderr, "error: {f}");
                    EXIT_VERIFICATION
                }
                None => EXIT_OK,
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<CommandOutput, CliError> {
    let (name, out, cfg) = match &cli.command {
        Command::Exact(a) => {
            let cfg = RunConfig::from_args(a, Format::Csv)?;
            ("exact", commands::exact::run(&cfg)?, cfg)
        }
        Command::Coeffs(a) => {
            let cfg = RunConfig::from_args(a, Format::Csv)?;
            ("coeffs", commands::coeffs::run(&cfg)?, cfg)
        }
        Command::Compare(a) => {
            let cfg = RunConfig::from_args(a, Format::Csv)?;
            ("compare", commands::compare::run(&cfg)?, cfg)
        }
        Command::Figure(a) => {
            let cfg = RunConfig::from_args(a, Format::Csv)?;
            ("figure", commands::figure::run(&cfg)?, cfg)
        }
        Command::Verify(a) => {
            let cfg = RunConfig::from_args(&a.run, Format::Json)?;
            (
                "verify",
                commands::verify::run(&cfg, a.perturb_coefficient)?,
                cfg,
            )
        }
    };
    let bytes = out.table.render(cfg.format, cfg.to_json(name))?;
    match &cfg.output {
        Some(path) => std::fs::write(path, &bytes).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?,
        None => {
            stdout.write_all(&bytes)?;
            stdout.flush()?;
        }
    }
    Ok(out)
}

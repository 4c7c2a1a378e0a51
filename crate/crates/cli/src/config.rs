use std::path::PathBuf;

use asmval_core::Prime;
use serde_json::{json, Value};

use crate::args::{Format, RunArgs};
use crate::error::CliError;

/// Validated run parameters shared by all subcommands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub prime: Prime,
    pub n_min: u64,
    pub n_max: u64,
    pub fourier_terms: usize,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(args: &RunArgs, default_format: Format) -> Result<Self, CliError> {
        let prime = Prime::new(args.prime)
            .map_err(|_| CliError::Usage(format!("--prime {} is not a prime", args.prime)))?;
        if args.n_min == 0 {
            return Err(CliError::Usage("--n-min must be at least 1".into()));
        }
        if args.n_min > args.n_max {
            return Err(CliError::Usage(format!(
                "--n-min {} exceeds --n-max {}",
                args.n_min, args.n_max
            )));
        }
        if args.fourier_terms == 0 {
            return Err(CliError::Usage("--fourier-terms must be at least 1".into()));
        }
        Ok(Self {
            prime,
            n_min: args.n_min,
            n_max: args.n_max,
            fourier_terms: args.fourier_terms,
            format: args.format.unwrap_or(default_format),
            output: args.output.clone(),
        })
    }

    pub fn n_range(&self) -> std::ops::RangeInclusive<u64> {
        self.n_min..=self.n_max
    }

    pub fn to_json(&self, command: &str) -> Value {
        json!({
            "command": command,
            "prime": self.prime.get(),
            "n_min": self.n_min,
            "n_max": self.n_max,
            "fourier_terms": self.fourier_terms,
            "format": self.format.name(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(prime: u64, n_min: u64, n_max: u64, k: usize) -> RunArgs {
        RunArgs {
            prime,
            n_min,
            n_max,
            fourier_terms: k,
            format: None,
            output: None,
        }
    }

    #[test]
    fn validation() {
        assert!(RunConfig::from_args(&args(7, 1, 1, 1), Format::Csv).is_ok());
        for bad in [
            args(9, 1, 2, 4),
            args(2, 0, 2, 4),
            args(2, 5, 4, 4),
            args(2, 1, 2, 0),
        ] {
            assert!(matches!(
                RunConfig::from_args(&bad, Format::Csv),
                Err(CliError::Usage(_))
            ));
        }
        let cfg = RunConfig::from_args(&args(3, 2, 9, 5), Format::Json).unwrap();
        assert_eq!(cfg.format, Format::Json);
        assert_eq!(cfg.n_range().count(), 8);
    }
}

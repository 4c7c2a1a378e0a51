use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VERIFICATION: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("writing {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("writing output: {0}")]
    Stream(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("computation failed: {0}")]
    Compute(#[from] asmval_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } | CliError::Stream(_) | CliError::Csv(_) | CliError::Json(_) => {
                EXIT_IO
            }
            CliError::Compute(_) => EXIT_VERIFICATION,
        }
    }
}

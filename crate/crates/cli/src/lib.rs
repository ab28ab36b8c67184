//! Library half of the `maxcone` binary: matrix file I/O and the
//! complexity bench harness. Kept as a library so integration tests can
//! drive the harness and the parsers directly.

pub mod bench;
pub mod io;

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),

    #[error(transparent)]
    Core(#[from] maxcone_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0}")]
    InvalidArgument(String),
}

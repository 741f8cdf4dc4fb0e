//! Files: graph6, shelf persistence and run outputs.

mod graph6;
mod outputs;
mod shelf_file;

use std::path::PathBuf;

use thiserror::Error;

pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use outputs::{read_graph6_file, write_outputs, OutputMode};
pub use shelf_file::{load_level, load_shelf, save_level, save_shelf, SHELF_FORMAT_VERSION};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: format version {found}, expected {expected}")]
    Version {
        path: PathBuf,
        found: String,
        expected: u32,
    },
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },
    #[error("{path}:{line}: {source}")]
    Graph6 {
        path: PathBuf,
        line: usize,
        #[source]
        source: Graph6Error,
    },
}

pub(crate) fn io_err(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> FileError {
    let path = path.into();
    move |source| FileError::Io { path, source }
}

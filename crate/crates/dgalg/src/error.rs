use thiserror::Error;

use crate::syntax::ParseError;

/// Everything that ends a run with exit code 3.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("config: line {line}, column {column}: {message}")]
    Config { line: usize, column: usize, message: String },
    /// A malformed string embedded in the config or given on the command
    /// line; `context` is its key path or flag.
    #[error("{context}: {error}")]
    Parse { context: String, error: ParseError },
    #[error("{0}")]
    Library(#[from] dgalg_core::Error),
}

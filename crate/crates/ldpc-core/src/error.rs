//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by matrix construction, file parsing, code generation,
/// encoding, decoding and simulation.
#[derive(Debug, Error)]
pub enum Error {
    /// Vector/matrix dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A text format could not be parsed. Carries the 1-based line number.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A value violates the constraints of a file format.
    #[error("format error: {0}")]
    Format(String),

    /// A parameter is outside its admissible range.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The parity part of the matrix does not admit back-substitution encoding.
    #[error("structure error: {0}")]
    Structure(String),

    /// The code has no nonzero codewords (rank(H) = n).
    #[error("degenerate code: parity-check matrix has full column rank")]
    DegenerateCode,

    /// An invalid combination of configuration options.
    #[error("config error: {0}")]
    Config(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared across the crate.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Lexical or syntactic error in a system file or expression, with
    /// 1-based line and column of the offending token.
    Parse { line: usize, col: usize, msg: String },
    /// The parsed system fails a structural requirement (wrong number of
    /// equations, inhomogeneous in the x-block, unknown variable, ...).
    Validate(String),
    /// A resultant/GCP computation cannot proceed, e.g. a polynomial has the
    /// wrong degree profile for the requested matrix construction.
    Structure(String),
    /// Every perturbation or coordinate-change attempt was rejected; the
    /// input is too degenerate for the randomized strategy in use.
    DegenerateLayout(String),
    /// Arithmetic invariant violated (exact division failed, interpolation
    /// check mismatch). Indicates a bug or an inconsistent input, never a
    /// rounding problem: all arithmetic is exact.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, col, msg } => {
                write!(f, "parse error at line {}, column {}: {}", line, col, msg)
            }
            Error::Validate(msg) => write!(f, "invalid system: {}", msg),
            Error::Structure(msg) => write!(f, "structural error: {}", msg),
            Error::DegenerateLayout(msg) => write!(f, "degenerate layout: {}", msg),
            Error::Internal(msg) => write!(f, "internal error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, col, msg: msg.into() }
    }
}

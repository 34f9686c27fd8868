//! Crate-wide error type.

use std::fmt;

/// Errors surfaced by the library.
///
/// Parse-class errors carry a byte position into the offending expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Syntax error in an expression or a rational literal.
    Parse { position: usize, message: String },
    /// A configuration failed validation; each violation names the offender.
    Validation(Vec<String>),
    /// Mathematically invalid input (zero denominator factor, singular system, ...).
    Domain(String),
    /// Dual-graph structure error (loops, disconnected, unknown vertex, ...).
    Graph(String),
    /// Operation not supported for this input (e.g. opaque classes at L = p).
    Unsupported(String),
    /// A resource guard tripped (enumeration too large).
    Guard(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::Validation(violations) => {
                write!(f, "validation failed:")?;
                for v in violations {
                    write!(f, "\n  - {v}")?;
                }
                Ok(())
            }
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Graph(m) => write!(f, "graph error: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::Guard(m) => write!(f, "guard exceeded: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

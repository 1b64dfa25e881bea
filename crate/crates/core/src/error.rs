//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by complex construction, chain algebra, and certificates.
#[derive(Debug, Error)]
pub enum Error {
    /// Input data violates a structural requirement (duplicate vertices,
    /// unknown ids, empty facet lists, malformed files).
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// A referenced simplex, vertex, or corpus entry does not exist.
    #[error("not found: {0}")]
    NotFound(String),

    /// An operation's precondition does not hold.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// A cochain modulus is incompatible with the requested phase precision.
    #[error("precision error: {0}")]
    Precision(String),

    /// Underlying I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Text parse failure for one of the file formats.
    #[error("parse error: {0}")]
    Parse(String),
}

//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed edge-list input; carries the 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A configured cap (vertex count, clique count, table size) was hit.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// Witness extraction was asked for a set the clique family does not shatter.
    #[error("set is not shattered: {0}")]
    NotShattered(String),

    /// The shattering data exists but no system of distinct partner vertices
    /// could be selected; callers fall back to the general pattern search.
    #[error("witness extraction failed: {0}")]
    ExtractionFailure(String),

    /// An internal identity that must hold by construction failed; this
    /// signals a bug, never a property of the input.
    #[error("assertion violated: {0}")]
    AssertionViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

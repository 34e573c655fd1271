//! Library-wide error type.
//!
//! Exact routines are total on their documented domains; everything that can
//! fail does so through [`Error`], never through panics, so the CLI can map
//! failures to exit codes.

use thiserror::Error;

/// All failure modes of the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Arguments outside an operation's domain (divergent integral,
    /// undefined index, zero divisor in a series expansion, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A structurally valid request that this build does not support,
    /// e.g. an unknown named route.
    #[error("usage error: {0}")]
    Usage(String),

    /// Coefficient extraction past the truncation order of a series.
    #[error("coefficient ({a},{b}) out of range: truncation order is {order}")]
    OutOfRange { a: u32, b: u32, order: u32 },

    /// Numeric refinement stopped before meeting the requested tolerance.
    /// Carries the best estimate as a decimal string.
    #[error("accuracy failure: {context}; best estimate {best}")]
    AccuracyFailure { context: String, best: String },

    /// An internal cross-check that must hold by construction failed.
    /// Indicates a bug, surfaced as an error instead of silently returning
    /// wrong values.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

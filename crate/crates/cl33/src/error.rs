//! Error types shared across the crate.

use thiserror::Error;

/// Unified error type for the engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument was outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Text input failed to parse; `offset` is the byte offset of the
    /// first offending character.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A multivector had components of the wrong parity for the requested
    /// decomposition.
    #[error("parity error: {0}")]
    Parity(String),

    /// A contour passed too close to (or through) a singularity.
    #[error("invalid contour: {0}")]
    InvalidContour(String),

    /// A quadrature or counting step failed to converge to an integer
    /// within tolerance.
    #[error("non-convergence: {0}")]
    NonConvergence(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

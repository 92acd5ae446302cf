//! Error taxonomy shared by every module in the crate.

use thiserror::Error;

/// Unified error type for configuration, series evaluation, solving and
/// simulation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar argument violated a mathematical domain requirement.
    #[error("domain error in {context}: {message}")]
    Domain {
        context: &'static str,
        message: String,
    },

    /// A configuration field or combination of fields is invalid.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// The finite-blocklength error model is not trusted below 100 channel
    /// uses per block.
    #[error("blocklength {m} is below the 100-channel-use validity floor")]
    Regime { m: f64 },

    /// The requested operating point is unreachable at any power split.
    #[error("infeasible targets: {0}")]
    Infeasible(String),

    /// An enumeration or allocation would exceed a hard resource cap.
    #[error("resource cap exceeded: {0}")]
    Resource(String),

    /// An iterative routine failed to converge.
    #[error("{routine} failed to converge after {iterations} iterations")]
    Convergence {
        routine: &'static str,
        iterations: usize,
    },
}

impl Error {
    /// Shorthand for a domain error.
    pub fn domain(context: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            context,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

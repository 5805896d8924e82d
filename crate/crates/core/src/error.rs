use thiserror::Error;

/// Errors produced by the numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation. The message
    /// names the violated bound.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("hypergeometric series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("quadrature tolerance not met: error estimate {estimate:e} exceeds {tolerance:e}")]
    ToleranceNotMet { estimate: f64, tolerance: f64 },

    /// Two independent evaluation routes for the same quantity disagree.
    #[error("inconsistent routes for {what}: {first} vs {second}")]
    Inconsistent {
        what: &'static str,
        first: f64,
        second: f64,
    },

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("root bracketing diverged: {0}")]
    Divergence(String),

    #[error("inversion did not converge after {iterations} iterations")]
    InversionFailed { iterations: usize },

    #[error("degenerate grid: {0}")]
    DegenerateGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

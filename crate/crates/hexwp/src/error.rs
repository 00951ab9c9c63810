use thiserror::Error;

/// Errors produced by the geometry kernel and the surface layers built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Points that must be distinct coincide, or a construction collapsed.
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    /// A numeric argument lies outside the domain of the requested law.
    #[error("domain error: {0}")]
    Domain(String),

    /// Geodesics or intersection data are not in the required relative position.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// One entry per violated surface invariant.
    #[error("invalid surface: {}", .0.join("; "))]
    InvalidSurface(Vec<String>),

    /// Unreadable or malformed input document.
    #[error("{location}: {message}")]
    Input { location: String, message: String },

    /// Two independent evaluations of the same quantity disagree.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("no convergence after {iterations} iterations (last residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("iteration cap {cap} exceeded; trace: {}", .trace.join(" | "))]
    IterationCap { cap: usize, trace: Vec<String> },
}

pub type Result<T> = std::result::Result<T, Error>;

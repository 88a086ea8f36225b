use thiserror::Error;

use crate::closed_form::DivergenceReason;

/// Errors reported by the evaluator and the numerical oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Parameters outside the supported domain (m or n not a positive integer).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Logarithm of zero requested; callers must skip the vanishing-frequency term.
    #[error("logarithm of zero is undefined")]
    ZeroLogArgument,

    /// The Fourier-side formulas are singular at zero frequency.
    #[error("frequency must be nonzero")]
    ZeroFrequency,

    /// Regularization parameter must be strictly positive.
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(f64),

    /// The requested integral diverges and has no numerical value.
    #[error("integral diverges: {0}")]
    Divergent(DivergenceReason),

    /// The adaptive scheme exhausted its interval budget before reaching
    /// the requested tolerance.
    #[error(
        "tolerance {requested:e} not reached: error estimate {achieved:e} after {intervals} intervals"
    )]
    ToleranceNotReached {
        requested: f64,
        achieved: f64,
        intervals: usize,
    },

    /// Series acceleration needs at least four partial sums.
    #[error("need at least 4 partial sums, got {0}")]
    TooFewPartialSums(usize),
}

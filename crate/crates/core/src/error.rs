use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("support size must be an odd integer >= 3, got {0}")]
    InvalidSupportSize(usize),

    #[error("lambda must be a finite nonnegative real, got {0}")]
    InvalidLambda(f64),

    #[error("this operation requires lambda > 0")]
    ZeroLambda,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("singular or rank-deficient system: {0}")]
    Singular(String),

    #[error("eigendecomposition failed: {0}")]
    Eigen(String),

    #[error("invalid MDP: {0}")]
    InvalidMdp(String),

    #[error("iteration did not converge within {iterations} steps (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error(
        "support too narrow: {clamped:.3e} mass clamped at the boundary atoms \
         (threshold {threshold:.3e})"
    )]
    SupportTooNarrow { clamped: f64, threshold: f64 },

    #[error("parameter norm {0:.3e} exceeded the divergence limit")]
    Diverged(f64),

    #[error("iteration budget of {budget} exhausted (last step {last_step:.3e})")]
    BudgetExhausted { budget: usize, last_step: f64 },

    #[error("error bound violated: lhs {lhs:.6e} > rhs {rhs:.6e} + {tolerance:.1e}")]
    BoundViolated { lhs: f64, rhs: f64, tolerance: f64 },

    #[error("invalid step size: {0}")]
    InvalidStepSize(f64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

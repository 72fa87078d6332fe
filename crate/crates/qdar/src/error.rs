//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by simulation, estimation, diagnostics and I/O.
#[derive(Error, Debug)]
pub enum Error {
    /// A recursion produced a non-finite value (explosive parameterization).
    #[error("non-finite value encountered at step {at}: the process is explosive for these coefficients")]
    NonFinite { at: usize },

    /// No optimizer start satisfied the stopping rule.
    #[error("optimizer did not converge from any of {starts} starts")]
    DidNotConverge { starts: usize },

    /// The input data admits no meaningful fit.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// The information matrix could not be inverted even after ridge regularization.
    #[error("singular information matrix after ridge regularization")]
    SingularInformation,

    /// Not enough observations for the requested operation.
    #[error("insufficient data: need at least {needed} observations, got {got}")]
    InsufficientData { needed: usize, got: usize },

    /// A regression design matrix is rank deficient.
    #[error("rank-deficient regression design after ridge regularization")]
    RankDeficient,

    /// An argument is outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// A text input could not be parsed.
    #[error("parse error at row {row}, column {col}: {msg}")]
    Parse { row: usize, col: usize, msg: String },

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

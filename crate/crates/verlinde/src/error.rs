//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the computational kernel.
#[derive(Debug, Error)]
pub enum Error {
    /// An input violated a documented precondition. The message names the
    /// violated precondition.
    #[error("invalid input: {0}")]
    Validation(String),

    /// Division by an exact zero.
    #[error("division by zero in exact arithmetic")]
    DivisionByZero,

    /// A value that must be a plain integer was not one. This is a primary
    /// test signal (it would mean the two engines disagree with the theory),
    /// not an ordinary crash path.
    #[error("expected an integer, got {0}")]
    NotAnInteger(String),

    /// A truncated series window was too small to certify the result even
    /// after retries with enlarged windows.
    #[error("series window too small (total-degree cap {cap}); result not stable")]
    Truncation { cap: i64 },

    /// The two independent evaluation methods produced different values.
    #[error("independent methods disagree: {0}")]
    Disagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the ideal engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible rings: {0}")]
    RingMismatch(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("ideal is not squarefree; use radical() or the irreducible-decomposition path")]
    NotSquarefree,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("empty component list")]
    EmptyDecomposition,
    #[error("time budget exhausted during {0}")]
    BudgetExhausted(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by exact arithmetic and field construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field of order {q} exceeds the configured bound {bound}")]
    FieldTooLarge { q: u64, bound: u64 },
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("element coefficients {0:?} are not a valid field element")]
    InvalidElement(Vec<u32>),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("arity {arity} exceeds the cap {cap}")]
    ArityOverCap { arity: u32, cap: u32 },
    #[error("exhaustive sweep of {predicted} tuples exceeds the budget {budget}; use sample mode")]
    BudgetExceeded { predicted: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

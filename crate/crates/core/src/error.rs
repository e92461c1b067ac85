use thiserror::Error;

/// Errors raised by the library. Each variant maps to one CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An enumeration would visit more objects than the configured budget.
    #[error("enumeration budget exceeded: {needed} objects requested, budget is {budget}")]
    Budget { needed: u128, budget: u64 },
    /// A hard size cap on a brute-force routine was exceeded.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A computed quantity violated a guaranteed property (a bug, not bad input).
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

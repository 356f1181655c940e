use std::time::Duration;

use thiserror::Error;

/// Errors produced by formulas, enumeration, colorings and the search oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments fall outside the range where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The general closed form needs `m >= 4`; `m = 3` has its own formula.
    #[error("the general formula requires m >= 4 (got m = {m}); use the m = 3 formula")]
    UnsupportedM { m: u64 },

    /// The parameters are valid but no closed form is known for them.
    #[error(
        "no closed form for t = {t}, m = {m}, n = {n}: the t = 2 value is only known for n >= {min_n}; use the search oracle"
    )]
    OutsideTheoremDomain { t: u64, m: u64, n: u64, min_n: u64 },

    /// Search or enumeration ran past its configured budget.
    #[error("budget exceeded after {nodes} nodes (deepest position {deepest}, elapsed {elapsed:?}): {reason}")]
    BudgetExceeded {
        reason: String,
        nodes: u64,
        deepest: usize,
        elapsed: Duration,
    },

    /// A coloring with no positions.
    #[error("empty coloring: n must be at least 1")]
    EmptyInput,

    /// Integer overflow while evaluating a formula.
    #[error("arithmetic overflow evaluating {0}")]
    Overflow(&'static str),

    /// Malformed coloring input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

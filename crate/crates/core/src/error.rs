//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A lattice-point enumeration would exceed the configured budget.
    #[error("enumeration budget exceeded: {needed} lattice points > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    /// A quotient dimension iteration reached its cap with nonzero
    /// dimensions remaining, contradicting the expected Artinian vanishing.
    #[error("nonzero dimensions persist at the iteration cap {cap} ({context})")]
    CapExceeded { cap: usize, context: String },

    /// The residual slot-permutation action needs a rectangular composition.
    #[error("residual action requires a rectangular composition (m,...,m), got {alpha}")]
    NotRectangular { alpha: String },

    /// Malformed composition or partition input.
    #[error("invalid input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

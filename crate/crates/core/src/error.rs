use thiserror::Error;

use crate::lattice::LatticeError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    /// A parameter is outside the range a result is stated for.
    #[error("domain error: {0}")]
    Domain(String),
    /// A standing hypothesis of an operation does not hold.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("character ({x}, {y}) is not in the lattice of Gamma({a}, {b})")]
    Membership {
        x: String,
        y: String,
        a: u64,
        b: u64,
    },
    #[error("pullback of character lattices is not injective (infinite index)")]
    InjectivityFailure,
    #[error("enumeration of {requested} items exceeds the cap of {cap}")]
    CapExceeded { requested: u128, cap: u128 },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub type Result<T> = std::result::Result<T, ClassifyError>;

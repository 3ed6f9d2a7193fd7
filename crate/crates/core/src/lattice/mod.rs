//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers: Hermite and
//! Smith normal forms with unimodular transforms, lattice indices, integer
//! solving, and linear congruence systems with canonical witnesses.

mod congruence;
mod index;
mod matrix;
mod normal_form;

pub use congruence::{
    solve_linear_congruences, Congruence, CongruenceWitness, LinearForm,
};
pub use index::{express_in_basis, lattice_index, LatticeIndex};
pub use matrix::IntMatrix;
pub use normal_form::{
    hermite_normal_form, integer_kernel, smith_normal_form, solve_integer_system, RowEchelon,
    SmithForm,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    Shape { rows: usize, cols: usize, len: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix must be nonempty")]
    Empty,
    #[error("column {column} of the sublattice is not an integer combination of the ambient basis")]
    Membership { column: usize },
    #[error("ambient columns are linearly dependent and do not form a basis")]
    NotABasis,
    #[error("congruence system has no constraints")]
    EmptySystem,
    #[error("modulus {0} is not positive")]
    NonPositiveModulus(num_bigint::BigInt),
}

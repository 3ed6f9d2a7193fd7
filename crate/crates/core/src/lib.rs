//! Exact-arithmetic classification of moduli stacks of cyclic covers of
//! projective spaces.
//!
//! - [`lattice`]: integer normal forms, lattice indices, congruence witnesses
//! - [`simple_cyclic`]: simple cyclic covers `H_{n,r,d}` of `Pⁿ`
//! - [`triple_cover`]: cyclic triple covers `H_{1,3,d₁,d₂}` of `P¹`
//! - [`strata`]: dimensions of loci of covers with extra automorphisms
//! - [`oracle`]: brute-force checks for every closed-form shortcut

pub mod error;
pub mod lattice;
pub mod oracle;
pub mod serde_dec;
pub mod simple_cyclic;
pub mod strata;
pub mod triple_cover;
pub mod verdict;

pub use error::{ClassifyError, Result};
pub use verdict::{Outcome, Reason, Verdict};

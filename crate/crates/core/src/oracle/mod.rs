//! Exhaustive verifiers for every closed-form shortcut.
//!
//! Each oracle decides its question by direct enumeration over a finite
//! range that is provably complete, without calling the shortcut it checks.

mod suite;

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{ClassifyError, Result};
use crate::lattice::{IntMatrix, LatticeIndex};
use crate::simple_cyclic::SimpleCyclicParams;
use crate::triple_cover::TripleCoverParams;

pub use suite::{verify, Discrepancy, Identity, IdentityReport, VerifyReport};

pub const DEFAULT_CAP: u128 = 10_000_000;
pub const CAP_ENV: &str = "STACKYCOVERS_CAP";

/// Cap from `STACKYCOVERS_CAP`, else [`DEFAULT_CAP`].
pub fn cap_from_env() -> Result<u128> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| ClassifyError::Domain(format!("{CAP_ENV} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

/// Inclusive parameter ranges for a sweep, with a cap on tuple count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepBox {
    pub n: RangeInclusive<u32>,
    pub r: RangeInclusive<u64>,
    pub d: RangeInclusive<u64>,
    pub d1: RangeInclusive<u64>,
    pub d2: RangeInclusive<u64>,
    pub cap: u128,
}

impl Default for SweepBox {
    fn default() -> Self {
        Self {
            n: 1..=6,
            r: 1..=12,
            d: 1..=12,
            d1: 1..=50,
            d2: 1..=50,
            cap: DEFAULT_CAP,
        }
    }
}

fn width<T: Copy + Into<u128> + PartialOrd>(r: &RangeInclusive<T>) -> u128 {
    let (lo, hi) = ((*r.start()).into(), (*r.end()).into());
    if hi < lo {
        0
    } else {
        hi - lo + 1
    }
}

impl SweepBox {
    pub fn with_cap(mut self, cap: u128) -> Self {
        self.cap = cap;
        self
    }

    /// Raw `(n, r, d)` and `(d1, d2)` tuple counts before validity filtering.
    pub fn tuple_count(&self) -> u128 {
        let simple = width(&self.n)
            .saturating_mul(width(&self.r))
            .saturating_mul(width(&self.d));
        let triple = width(&self.d1).saturating_mul(width(&self.d2));
        simple.saturating_add(triple)
    }

    pub fn check_cap(&self) -> Result<()> {
        let requested = self.tuple_count();
        if requested > self.cap {
            return Err(ClassifyError::CapExceeded {
                requested,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Valid simple cyclic parameters in lexicographic `(n, r, d)` order.
    pub fn simple_params(&self) -> Vec<SimpleCyclicParams> {
        let mut out = Vec::new();
        for n in self.n.clone() {
            for r in self.r.clone() {
                for d in self.d.clone() {
                    if let Ok(p) = SimpleCyclicParams::new(n, r, d) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    /// Triple-cover parameters with `l₁, l₂ ≥ 4`, in lexicographic order.
    pub fn triple_params(&self) -> Vec<TripleCoverParams> {
        let mut out = Vec::new();
        for d1 in self.d1.clone() {
            for d2 in self.d2.clone() {
                if let Ok(p) = TripleCoverParams::new(d1, d2) {
                    out.push(p);
                }
            }
        }
        out
    }
}

/// Least `k ∈ [0, d_from)` with `d_from | k(n+1) + d_to`.
///
/// The condition only depends on `k mod d_from`, so the range is complete.
pub fn oracle_torsor_witness(d_from: u64, d_to: u64, n: u32) -> Option<u64> {
    let n1 = n as u128 + 1;
    (0..d_from).find(|&k| (k as u128 * n1 + d_to as u128) % d_from as u128 == 0)
}

/// Size of the orbit of `0` under `+gen_exponent` in `Z/relation_exponent`.
pub fn oracle_cyclic_quotient_order(gen_exponent: &BigInt, relation_exponent: &BigInt, cap: u128) -> Result<BigInt> {
    if !gen_exponent.is_positive() || !relation_exponent.is_positive() {
        return Err(ClassifyError::Domain("exponents must be positive".into()));
    }
    let modulus = match relation_exponent.to_u128() {
        Some(m) if m <= cap => m,
        _ => {
            return Err(ClassifyError::CapExceeded {
                requested: relation_exponent.to_u128().unwrap_or(u128::MAX),
                cap,
            })
        }
    };
    let step = (gen_exponent % relation_exponent).to_u128().expect("reduced below modulus");
    let mut x = step % modulus;
    let mut count: u128 = 1;
    while x != 0 {
        x = (x + step) % modulus;
        count += 1;
    }
    Ok(BigInt::from(count))
}

/// `{y : 0 ≤ αy + β < n}` as an inclusive range, `n > 0`.
fn y_window(alpha: i128, beta: i128, n: i128) -> Option<(i128, i128)> {
    if alpha == 0 {
        return (0..n).contains(&beta).then_some((i128::MIN, i128::MAX));
    }
    let (lo, hi) = if alpha > 0 {
        (Integer::div_ceil(&-beta, &alpha), Integer::div_floor(&(n - 1 - beta), &alpha))
    } else {
        let a = -alpha;
        (Integer::div_ceil(&(beta - n + 1), &a), Integer::div_floor(&beta, &a))
    };
    (lo <= hi).then_some((lo, hi))
}

/// Number of integer points in the half-open parallelogram spanned by the
/// two columns of `basis`, one per coset; `Infinite` when they are
/// dependent. Counted column by column over the bounding box.
pub fn oracle_lattice_index_boxcount(basis: &IntMatrix) -> Result<LatticeIndex> {
    if basis.shape() != (2, 2) {
        return Err(ClassifyError::Domain("box count needs a 2×2 basis".into()));
    }
    let entry = |i, j| -> Result<i128> {
        let v: &BigInt = &basis[(i, j)];
        v.to_i128()
            .filter(|x| x.unsigned_abs() < 1 << 40)
            .ok_or_else(|| ClassifyError::Domain(format!("basis entry {v} too large for box count")))
    };
    let (b1x, b1y, b2x, b2y) = (entry(0, 0)?, entry(1, 0)?, entry(0, 1)?, entry(1, 1)?);
    let det = b1x * b2y - b1y * b2x;
    if det == 0 {
        return Ok(LatticeIndex::Infinite);
    }
    let (sign, n) = (det.signum(), det.abs());
    // s·det = x·b2y − y·b2x and t·det = b1x·y − b1y·x, both in [0, det)
    let xs = [0, b1x, b2x, b1x + b2x];
    let (xmin, xmax) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let mut count: i128 = 0;
    for x in xmin..=xmax {
        let Some((lo1, hi1)) = y_window(-b2x * sign, x * b2y * sign, n) else {
            continue;
        };
        let Some((lo2, hi2)) = y_window(b1x * sign, -b1y * x * sign, n) else {
            continue;
        };
        let (lo, hi) = (lo1.max(lo2), hi1.min(hi2));
        if lo <= hi {
            count += hi - lo + 1;
        }
    }
    Ok(LatticeIndex::Finite(BigInt::from(count)))
}

/// Whether `s·d₂ + t·d₁ + 1` is even for some `s, t ∈ {0, 1}`.
pub fn oracle_parity_solver(d1: u64, d2: u64) -> bool {
    (0..2u64).any(|s| (0..2u64).any(|t| (s * d2 + t * d1 + 1) % 2 == 0))
}

/// Number of `α ∈ [0, (rd−1)ⁿ·g)` with `g | α` and `(rd−1)ⁿ | m·rd·α/g`,
/// i.e. classes of `Pic(D)` trivial on both test stabilizers.
pub fn oracle_invariant_classes(p: &SimpleCyclicParams, cap: u128) -> Result<u128> {
    let rd = p.rd() as i128;
    let order = BigInt::from(rd - 1).pow(p.n());
    let Some(order) = order.to_i128().filter(|&o| o as u128 <= cap) else {
        return Err(ClassifyError::CapExceeded {
            requested: order.to_u128().unwrap_or(u128::MAX),
            cap,
        });
    };
    // m mod order, by direct summation of the geometric series
    let mut m = 0i128;
    let mut term = 1i128;
    for _ in 0..=p.n() {
        m = (m + term).rem_euclid(order);
        term = (term * (1 - rd)).rem_euclid(order);
    }
    let mut count = 0u128;
    for j in 0..order {
        // α = j·g
        if (m * (rd % order) % order * j).rem_euclid(order).is_zero() {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsor_examples() {
        assert_eq!(oracle_torsor_witness(8, 4, 1), Some(2));
        assert_eq!(oracle_torsor_witness(6, 3, 1), None);
        assert_eq!(oracle_torsor_witness(9, 9, 4), Some(0));
    }

    #[test]
    fn orbit_examples() {
        let o = |g: i64, r: i64| oracle_cyclic_quotient_order(&g.into(), &r.into(), DEFAULT_CAP).unwrap();
        assert_eq!(o(3, 30), BigInt::from(10));
        assert_eq!(o(1, 17), BigInt::from(17));
        assert_eq!(o(2, 56), BigInt::from(28));
        assert!(matches!(
            oracle_cyclic_quotient_order(&1.into(), &100.into(), 50),
            Err(ClassifyError::CapExceeded { .. })
        ));
    }

    #[test]
    fn boxcount_examples() {
        let m = IntMatrix::from_rows(&[&[2i64, -1], &[-1, 2]]);
        assert_eq!(oracle_lattice_index_boxcount(&m).unwrap(), LatticeIndex::Finite(3.into()));
        let m = IntMatrix::identity(2);
        assert_eq!(oracle_lattice_index_boxcount(&m).unwrap(), LatticeIndex::Finite(1.into()));
        let m = IntMatrix::from_rows(&[&[2i64, 0], &[0, 0]]);
        assert_eq!(oracle_lattice_index_boxcount(&m).unwrap(), LatticeIndex::Infinite);
        let m = IntMatrix::from_rows(&[&[4i64, 0], &[12, 5]]);
        assert_eq!(oracle_lattice_index_boxcount(&m).unwrap(), LatticeIndex::Finite(20.into()));
    }

    #[test]
    fn parity_examples() {
        assert!(!oracle_parity_solver(4, 4));
        assert!(oracle_parity_solver(5, 4));
        assert!(oracle_parity_solver(3, 3));
    }

    #[test]
    fn invariant_classes_only_identity() {
        for (n, r, d) in [(1, 2, 2), (2, 2, 3), (3, 1, 5), (1, 5, 5)] {
            let p = SimpleCyclicParams::new(n, r, d).unwrap();
            assert_eq!(oracle_invariant_classes(&p, DEFAULT_CAP).unwrap(), 1);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let b = SweepBox::default().with_cap(100);
        assert!(matches!(b.check_cap(), Err(ClassifyError::CapExceeded { .. })));
        assert!(SweepBox::default().check_cap().is_ok());
    }
}

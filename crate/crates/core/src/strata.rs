//! Dimensions of the loci of covers with automorphisms beyond the deck group.
//!
//! For `n = 1` the branch divisor is `rd` points on `P¹` and an extra
//! automorphism of prime order `p` fixes `i ∈ {0, 1, 2}` of them. For `n = 2`
//! the branch curve is a plane curve of degree `d`, stratified into six cases
//! by the shape of the automorphism.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{ClassifyError, Result};
use crate::simple_cyclic::CharAssumption;

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

fn primes_up_to(n: u64) -> impl Iterator<Item = u64> {
    (2..=n).filter(|&p| is_prime(p))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StratumP1 {
    pub rd: u64,
    pub p: u64,
    pub i: u8,
    /// `(rd − i)/p − 1`
    pub dim: i64,
    /// Negative dimension: the stratum is empty.
    pub empty: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimReportP1 {
    pub rd: u64,
    pub max_stratum_dim: i64,
    /// `rd − 3`
    pub ambient_dim: i64,
    pub codim: i64,
    /// The general bound covers `rd ≥ 8`; smaller values are computed only.
    pub covered_by_general_bound: bool,
    pub strata: Vec<StratumP1>,
}

pub fn aut_locus_codim_p1(rd: u64) -> Result<CodimReportP1> {
    if rd < 4 {
        return Err(ClassifyError::Domain(format!("requires rd ≥ 4 (got rd = {rd})")));
    }
    let mut strata = Vec::new();
    for p in primes_up_to(rd) {
        for i in 0..=2u8 {
            let m = rd - i as u64;
            if m % p == 0 {
                let dim = (m / p) as i64 - 1;
                strata.push(StratumP1 {
                    rd,
                    p,
                    i,
                    dim,
                    empty: dim < 0,
                });
            }
        }
    }
    let max_stratum_dim = strata.iter().map(|s| s.dim).max().unwrap_or(-1);
    let ambient_dim = rd as i64 - 3;
    Ok(CodimReportP1 {
        rd,
        max_stratum_dim,
        ambient_dim,
        codim: ambient_dim - max_stratum_dim,
        covered_by_general_bound: rd >= 8,
        strata,
    })
}

/// Which constant to subtract from `(d+2)(d+1)/2` for `dim C(d)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AmbientConvention {
    /// `(d+2)(d+1)/2 − 9`: plane curves of degree `d` modulo `PGL₃`.
    #[default]
    Standard,
    /// `(d+2)(d+1)/2 − 8`
    Printed,
}

impl AmbientConvention {
    pub fn offset(self) -> i64 {
        match self {
            AmbientConvention::Standard => 9,
            AmbientConvention::Printed => 8,
        }
    }

    pub fn ambient_dim(self, d: u64) -> i64 {
        ((d + 2) * (d + 1) / 2) as i64 - self.offset()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumP2 {
    pub d: u64,
    pub case_id: u8,
    pub m: u64,
    /// `d − 1 = mk` in case 1, `d = mk` in case 2
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    /// Exact value, e.g. `"7/3"` for a fractional bound.
    pub value: String,
    /// Floor of `value`, used in the comparison.
    pub dim_or_bound: i64,
    pub is_upper_bound: bool,
    /// `dim_or_bound > ambient_dim − 2`
    pub violates: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimReportP2 {
    pub d: u64,
    pub convention: AmbientConvention,
    pub ambient_dim: i64,
    pub ambient_dim_standard: i64,
    pub ambient_dim_printed: i64,
    /// Largest admissible stratum dimension, `ambient_dim − 2`.
    pub threshold: i64,
    pub per_case: Vec<StratumP2>,
    pub codim_at_least_two: bool,
    /// Hypothesis under which the stratification holds; recorded, not enforced.
    pub char_hypothesis: String,
    pub char_assumption: CharAssumption,
}

impl CodimReportP2 {
    pub fn violations(&self) -> impl Iterator<Item = &StratumP2> {
        self.per_case.iter().filter(|s| s.violates)
    }
}

/// `Σ_{j=2}^{d−2} (j+1) = d(d−1)/2 − 3`
fn column_sum(d: u64) -> BigInt {
    BigInt::from(d * (d - 1) / 2) - 3
}

pub fn aut_locus_codim_p2(d: u64, char_assumption: CharAssumption) -> Result<CodimReportP2> {
    aut_locus_codim_p2_with(d, char_assumption, AmbientConvention::default())
}

pub fn aut_locus_codim_p2_with(
    d: u64,
    char_assumption: CharAssumption,
    convention: AmbientConvention,
) -> Result<CodimReportP2> {
    if d < 4 {
        return Err(ClassifyError::Domain(format!("requires d ≥ 4 (got d = {d})")));
    }
    let ambient_dim = convention.ambient_dim(d);
    let threshold = ambient_dim - 2;
    let mut per_case = Vec::new();
    let mut push = |case_id: u8, m: u64, k: Option<u64>, value: BigRational, is_upper_bound: bool| {
        let floor = value.floor().to_integer();
        let dim_or_bound = i64::try_from(&floor).expect("stratum dimension fits in i64");
        per_case.push(StratumP2 {
            d,
            case_id,
            m,
            k,
            value: value.to_string(),
            dim_or_bound,
            is_upper_bound,
            violates: dim_or_bound > threshold,
        });
    };
    let exact = |x: u64| BigRational::from_integer(BigInt::from(x));

    for (case_id, base) in [(1u8, d - 1), (2, d)] {
        for m in primes_up_to(base).filter(|m| base % m == 0) {
            let k = base / m;
            let dim = m * k * (k - 1) / 2 + 2 * k + d;
            push(case_id, m, Some(k), exact(dim), false);
        }
    }

    let sum = column_sum(d);
    let case3_moduli = (d - 1) * (d - 2);
    for m in primes_up_to(case3_moduli).filter(|&m| m >= 3 && case3_moduli % m == 0) {
        let bound = BigRational::new(BigInt::from(3) * &sum, BigInt::from(m));
        push(3, m, None, bound, true);
    }
    let bound = BigRational::new(&sum + BigInt::from(3 * d) - 8, BigInt::from(3));
    for case_id in 4..=6 {
        push(case_id, 3, None, bound.clone(), true);
    }

    let codim_at_least_two = per_case.iter().all(|s| !s.violates);
    Ok(CodimReportP2 {
        d,
        convention,
        ambient_dim,
        ambient_dim_standard: AmbientConvention::Standard.ambient_dim(d),
        ambient_dim_printed: AmbientConvention::Printed.ambient_dim(d),
        threshold,
        per_case,
        codim_at_least_two,
        char_hypothesis: format!("char(k) = 0 or char(k) > {}", (d - 1) * (d - 2) + 1),
        char_assumption,
    })
}

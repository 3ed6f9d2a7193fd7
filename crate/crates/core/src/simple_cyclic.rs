//! Classifiers for the stack `H_{n,r,d}` of simple cyclic covers of `Pⁿ`.
//!
//! A simple cyclic cover of degree `r` is branched along a smooth
//! hypersurface of degree `rd`. Everything below reduces to gcd bookkeeping
//! on `(n, r, d)` plus a few exact lattice quotients in the character group
//! of `GL_{n+1}`, whose characters are powers of `det`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{ClassifyError, Result};
use crate::lattice::{lattice_index, solve_linear_congruences, Congruence, CongruenceWitness, IntMatrix, LinearForm};
use crate::verdict::{Reason, Verdict};

/// Whether classifiers stated for `rd ≥ 4` refuse smaller branch degrees.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RdPolicy {
    #[default]
    Strict,
    Relaxed,
}

/// Caller-supplied assumption on the characteristic of the base field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharAssumption {
    Zero,
    /// Characteristic larger than `(rd−1)(rd−2)+1`.
    GreaterThanBound,
    #[default]
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleCyclicParams {
    n: u32,
    r: u64,
    d: u64,
    rd: u64,
    #[serde(default)]
    policy: RdPolicy,
}

impl SimpleCyclicParams {
    /// `n ≥ 1`, `r ≥ 1`, `d ≥ 1` and `rd ≥ 2`. `r = 1` is accepted as the
    /// degenerate case where the stack coincides with its rigidification.
    pub fn new(n: u32, r: u64, d: u64) -> Result<Self> {
        if n == 0 {
            return Err(ClassifyError::Domain("requires n ≥ 1".into()));
        }
        if r == 0 || d == 0 {
            return Err(ClassifyError::Domain("requires r ≥ 1 and d ≥ 1".into()));
        }
        let rd = r
            .checked_mul(d)
            .ok_or_else(|| ClassifyError::Domain("r·d overflows 64 bits".into()))?;
        if rd < 2 {
            return Err(ClassifyError::Domain("requires rd ≥ 2".into()));
        }
        Ok(Self {
            n,
            r,
            d,
            rd,
            policy: RdPolicy::Strict,
        })
    }

    pub fn with_policy(mut self, policy: RdPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn rd(&self) -> u64 {
        self.rd
    }

    pub fn policy(&self) -> RdPolicy {
        self.policy
    }

    /// `gcd(rd, n+1)`
    pub fn g(&self) -> u64 {
        self.rd.gcd(&(self.n as u64 + 1))
    }

    /// `gcd(d, n+1)`
    pub fn g_d(&self) -> u64 {
        self.d.gcd(&(self.n as u64 + 1))
    }

    /// `rd·(rd−1)ⁿ`, the exponent killing `det` in the Picard group.
    pub fn relation_exponent(&self) -> BigInt {
        BigInt::from(self.rd) * Pow::pow(BigInt::from(self.rd - 1), self.n)
    }

    pub(crate) fn require_rd_at_least_4(&self) -> Result<()> {
        if self.rd < 4 && self.policy == RdPolicy::Strict {
            return Err(ClassifyError::Domain(format!(
                "requires rd ≥ 4 (got rd = {})",
                self.rd
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SimpleCyclicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, r={}, d={})", self.n, self.r, self.d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsorMorphism {
    pub exists: bool,
    pub witness: Option<CongruenceWitness>,
}

/// Whether `GL_{n+1}/μ_{d_from} → GL_{n+1}/μ_{d_to}` exists over `PGL_{n+1}`.
///
/// Decided by `gcd(d_from, n+1) | d_to`; the witness is the least `k ≥ 0`
/// with `d_from | k(n+1) + d_to`.
pub fn torsor_hom_exists(d_from: u64, d_to: u64, n: u32) -> Result<TorsorMorphism> {
    if d_from == 0 || d_to == 0 {
        return Err(ClassifyError::Domain("torsor degrees must be positive".into()));
    }
    let exists = d_to % d_from.gcd(&(n as u64 + 1)) == 0;
    let system = [Congruence::new(
        LinearForm::new().term("k", n as u64 + 1).constant(d_to),
        d_from,
    )];
    let witness = solve_linear_congruences(&system)?;
    if witness.is_some() != exists {
        return Err(ClassifyError::Internal(format!(
            "gcd criterion and witness search disagree for ({d_from}, {d_to}, {n})"
        )));
    }
    Ok(TorsorMorphism { exists, witness })
}

/// Least positive `t` such that `O(t)` on `Pⁿ` is `GL_{n+1}/μ_{rd}`-linearizable.
pub fn least_linearized_degree(p: &SimpleCyclicParams) -> u64 {
    p.g()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TautologicalFamily {
    pub exists: bool,
    pub brauer_severi_zariski_trivial: bool,
}

pub fn tautological_family_exists(p: &SimpleCyclicParams) -> TautologicalFamily {
    let g = p.g();
    TautologicalFamily {
        exists: p.d % g == 0,
        brauer_severi_zariski_trivial: g == 1,
    }
}

/// `(r, rd)` pairs for which `H_{2,r,d}` is known not to be rational although
/// `rd ≤ 48`.
pub const PLANE_NON_RATIONAL: [(u64, u64); 9] = [
    (3, 6),
    (3, 12),
    (3, 15),
    (9, 18),
    (3, 24),
    (6, 24),
    (12, 24),
    (3, 48),
    (6, 48),
];

fn family_reason(p: &SimpleCyclicParams) -> Reason {
    let g = p.g();
    let divides = p.d % g == 0;
    Reason::new(
        "taut-family-gcd",
        format!(
            "tautological family exists iff gcd(rd, n+1) | d; gcd({}, {}) = {} {} {}",
            p.rd,
            p.n + 1,
            g,
            if divides { "divides" } else { "does not divide" },
            p.d
        ),
    )
}

pub fn rationality_simple(p: &SimpleCyclicParams) -> Result<Verdict> {
    p.require_rd_at_least_4()?;
    let has_family = tautological_family_exists(p).exists;
    let (r, rd, d) = (p.r, p.rd, p.d);
    let verdict = match p.n {
        1 => {
            let rational = rd % 2 == 1 || d % 2 == 0;
            let mut reasons = vec![
                family_reason(p),
                Reason::new(
                    "coarse-rational-n1",
                    "M_{1,r,d} is the moduli space of rd unordered points on P¹, rational for rd ≥ 4",
                ),
            ];
            reasons.push(Reason::new(
                "rational-n1",
                format!(
                    "H_{{1,r,d}} is rational iff rd is odd or d is even (rd = {rd}, d = {d})"
                ),
            ));
            if rational {
                Verdict::yes(reasons)
            } else {
                Verdict::no(reasons)
            }
        }
        2 if rd >= 49 => {
            let rational = d % 3 == 0 || rd % 3 != 0;
            let reasons = vec![
                family_reason(p),
                Reason::new(
                    "rational-n2-large",
                    format!(
                        "for rd ≥ 49, H_{{2,r,d}} is rational iff 3 | d or 3 ∤ rd (rd = {rd}, d = {d})"
                    ),
                ),
            ];
            if rational {
                Verdict::yes(reasons)
            } else {
                Verdict::no(reasons)
            }
        }
        2 if PLANE_NON_RATIONAL.contains(&(r, rd)) => Verdict::no(vec![
            Reason::new(
                "rational-n2-exceptional",
                format!("(r, rd) = ({r}, {rd}) lies in the exceptional non-rational set"),
            ),
            family_reason(p),
        ]),
        _ if !has_family => Verdict::no(vec![
            family_reason(p),
            Reason::new(
                "not-rational-without-family",
                "a stack without a tautological family over any open subset of its coarse space is not rational",
            ),
        ]),
        2 => Verdict::conditional(
            format!("rationality of C(2,{rd})"),
            vec![
                family_reason(p),
                Reason::new(
                    "rational-n2-small",
                    format!(
                        "for rd ≤ 48 outside the exceptional set, H_{{2,r,d}} is rational iff C(2, rd) is (rd = {rd})"
                    ),
                ),
            ],
        ),
        n => Verdict::conditional(
            format!("rationality of M_{{{n},{r},{d}}}"),
            vec![
                family_reason(p),
                Reason::new(
                    "rational-iff-coarse",
                    "with a tautological family, H_{n,r,d} is rational iff M_{n,r,d} is rational",
                ),
            ],
        ),
    };
    Ok(verdict
        .annotate("unirational", "yes")
        .annotate("coarse_unirational", "yes"))
}

/// A finite cyclic group `⟨det^e⟩` with `det^R = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicPresentation {
    pub generator_label: String,
    #[serde(with = "crate::serde_dec")]
    pub generator_exponent: BigInt,
    #[serde(with = "crate::serde_dec")]
    pub relation_exponent: BigInt,
    #[serde(with = "crate::serde_dec")]
    pub order: BigInt,
}

impl CyclicPresentation {
    /// Order is `[eZ : RZ]`, read off the lattice quotient.
    fn from_exponents(generator_exponent: BigInt, relation_exponent: BigInt) -> Result<Self> {
        let ambient = IntMatrix::new(1, 1, vec![generator_exponent.clone()])?;
        let sub = IntMatrix::new(1, 1, vec![relation_exponent.clone()])?;
        let order = match lattice_index(&sub, &ambient)?.finite() {
            Some(o) => o.clone(),
            None => {
                return Err(ClassifyError::Internal(
                    "relation exponent vanished; Picard group is not finite".into(),
                ))
            }
        };
        Ok(Self {
            generator_label: format!("det^{generator_exponent}"),
            generator_exponent,
            relation_exponent,
            order,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }
}

impl fmt::Display for CyclicPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}> of order {}", self.generator_label, self.order)
    }
}

/// `Pic(H_{n,r,d})`: generated by `det^{d/gcd(d,n+1)}` with `det^{rd(rd−1)ⁿ} = 1`.
pub fn pic_stack(p: &SimpleCyclicParams) -> Result<CyclicPresentation> {
    CyclicPresentation::from_exponents(BigInt::from(p.d / p.g_d()), p.relation_exponent())
}

/// Picard group of `[A_sm(n, rd) / (GL_{n+1}/μ_{kd})]` for `k | r`; with
/// `k = r` this is the rigidification `D_{n,r,d}`.
pub fn pic_quotient(p: &SimpleCyclicParams, k: u64) -> Result<CyclicPresentation> {
    check_divides_r(p, k)?;
    let kd = k * p.d;
    let exponent = kd / kd.gcd(&(p.n as u64 + 1));
    CyclicPresentation::from_exponents(BigInt::from(exponent), p.relation_exponent())
}

pub fn pic_rigidified(p: &SimpleCyclicParams) -> Result<CyclicPresentation> {
    pic_quotient(p, p.r)
}

/// Index of `Pic([A_sm/(GL_{n+1}/μ_{kd})])` in `Pic(H_{n,r,d})`:
/// `k·gcd(d,n+1)/gcd(kd,n+1)`.
pub fn pic_index(p: &SimpleCyclicParams, k: u64) -> Result<BigInt> {
    check_divides_r(p, k)?;
    let n1 = p.n as u64 + 1;
    let num = BigInt::from(k) * BigInt::from(p.g_d());
    let den = BigInt::from((k * p.d).gcd(&n1));
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(ClassifyError::Internal(format!(
            "index {num}/{den} is not an integer"
        )));
    }
    Ok(q)
}

fn check_divides_r(p: &SimpleCyclicParams, k: u64) -> Result<()> {
    if k == 0 || p.r % k != 0 {
        return Err(ClassifyError::Domain(format!("requires k | r (k = {k}, r = {})", p.r)));
    }
    Ok(())
}

/// Intermediate integers of the argument that `Pic(M_{n,r,d})` vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoarsePicProof {
    pub g: u64,
    /// `1 + Σ_{i=1..n} (1−rd)^i`
    #[serde(with = "crate::serde_dec")]
    pub m: BigInt,
    /// `(rd−1)ⁿ`, the order of the diagonal automorphism `ρ`
    #[serde(with = "crate::serde_dec")]
    pub automorphism_order: BigInt,
    /// `gcd(m·rd, (rd−1)ⁿ)`, required to be 1
    #[serde(with = "crate::serde_dec")]
    pub coprimality_gcd: BigInt,
    /// `gcd(g, (rd−1)ⁿ)`, required to be 1
    #[serde(with = "crate::serde_dec")]
    pub g_coprimality_gcd: BigInt,
    /// order of `Pic(D_{n,r,d})`, i.e. `(rd−1)ⁿ·g`
    #[serde(with = "crate::serde_dec")]
    pub rigidified_order: BigInt,
    /// every invariant exponent `α` is a multiple of this
    #[serde(with = "crate::serde_dec")]
    pub alpha_divisor: BigInt,
    pub conclusion: String,
}

/// Replays the arithmetic showing `Pic(M_{n,r,d}) = 0` for `rd ≥ 4`.
///
/// A class `s^α` of `Pic(D)` (with `s = det^{rd/g}`) descends to the coarse
/// space only if it is trivial on every stabilizer. Evaluating on
/// `ρ = diag(ζ, ζ^{1−rd}, …, ζ^{(1−rd)ⁿ})` gives `(rd−1)ⁿ | m·rd·α/g`, and on
/// `diag(1, …, ζ_{rd})` gives `g | α`. Both together force `α ≡ 0` modulo
/// the order of `s`.
pub fn verify_coarse_pic_trivial(p: &SimpleCyclicParams) -> Result<CoarsePicProof> {
    p.require_rd_at_least_4()?;
    let rd = BigInt::from(p.rd);
    let g = BigInt::from(p.g());
    let one_minus_rd = BigInt::one() - &rd;
    let mut m = BigInt::one();
    let mut power = BigInt::one();
    for _ in 0..p.n {
        power *= &one_minus_rd;
        m += &power;
    }
    let automorphism_order: BigInt = Pow::pow(&rd - 1, p.n);
    let coprimality_gcd = (&m * &rd).gcd(&automorphism_order);
    let g_coprimality_gcd = g.gcd(&automorphism_order);
    if !coprimality_gcd.is_one() {
        return Err(ClassifyError::Internal(format!(
            "gcd(m·rd, (rd−1)^n) = {coprimality_gcd} for {p}"
        )));
    }
    if !g_coprimality_gcd.is_one() {
        return Err(ClassifyError::Internal(format!(
            "gcd(g, (rd−1)^n) = {g_coprimality_gcd} for {p}"
        )));
    }
    // (rd−1)ⁿ | α and g | α with the two coprime
    let alpha_divisor = automorphism_order.lcm(&g);
    let rigidified_order = pic_rigidified(p)?.order;
    if rigidified_order != &automorphism_order * &g {
        return Err(ClassifyError::Internal(format!(
            "Pic(D) has order {rigidified_order}, expected (rd−1)^n·g for {p}"
        )));
    }
    if !alpha_divisor.mod_floor(&rigidified_order).is_zero() {
        return Err(ClassifyError::Internal(format!(
            "invariant exponents are not forced trivial for {p}"
        )));
    }
    Ok(CoarsePicProof {
        g: p.g(),
        m,
        automorphism_order,
        coprimality_gcd,
        g_coprimality_gcd,
        rigidified_order,
        alpha_divisor,
        conclusion: "Pic = 0".into(),
    })
}

/// Whether the coarse map has no section over the automorphism-free locus
/// `M⁰`. `Yes` means no section exists.
///
/// `codim_at_least_two` is the caller's assertion that `M ∖ M⁰` has
/// codimension at least two; it is only consulted where no proven
/// codimension bound applies.
pub fn no_section_over_m0(
    p: &SimpleCyclicParams,
    char_assumption: CharAssumption,
    codim_at_least_two: bool,
) -> Verdict {
    let g = p.g();
    if p.d % g != 0 {
        return Verdict::yes(vec![
            family_reason(p),
            Reason::new(
                "no-family-anywhere",
                "without a tautological family on any open subset there is no section over M⁰",
            ),
        ]);
    }
    let index = p.r * p.g_d() / g;
    let index_reason = Reason::new(
        "pic-index-obstruction",
        format!(
            "r·gcd(d,n+1)/gcd(rd,n+1) = {}·{}/{} = {index}; a section over M⁰ needs this index to be 1",
            p.r,
            p.g_d(),
            g
        ),
    );
    if index <= 1 {
        return Verdict::conditional(
            "existence of a section over M⁰ (Picard index is 1)",
            vec![index_reason],
        );
    }
    let codim_reason = match p.n {
        1 if p.rd >= 8 => Some(Reason::new(
            "codim-p1",
            format!("the automorphism locus of M_{{1,r,d}} has codimension ≥ 2 for rd ≥ 8 (rd = {})", p.rd),
        )),
        2 if p.rd >= 7 && char_assumption != CharAssumption::Unknown => Some(Reason::new(
            "codim-p2",
            format!(
                "the automorphism locus of M_{{2,r,d}} has codimension ≥ 2 for rd ≥ 7 when char = 0 or char > (rd−1)(rd−2)+1 = {} (rd = {})",
                (p.rd - 1) * (p.rd - 2) + 1,
                p.rd
            ),
        )),
        _ if codim_at_least_two => Some(Reason::new(
            "codim-supplied",
            "codim(M ∖ M⁰) ≥ 2 supplied by the caller",
        )),
        _ => None,
    };
    match codim_reason {
        Some(c) => Verdict::yes(vec![family_reason(p), index_reason, c]),
        None => {
            let condition = if p.n == 2 && p.rd >= 7 {
                format!(
                    "char(k) = 0 or char(k) > {}",
                    (p.rd - 1) * (p.rd - 2) + 1
                )
            } else {
                "codim(M∖M⁰) ≥ 2".to_string()
            };
            Verdict::conditional(condition, vec![family_reason(p), index_reason])
        }
    }
}

/// Existence of a simple cyclic `Gⁿ_r` on a tautological family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GnrRecord {
    pub simple_cyclic_gnr_exists: bool,
    /// `k` such that a simple cyclic `k·Gⁿ_r` always exists
    pub guaranteed_multiple: u64,
}

pub fn gnr_classification(p: &SimpleCyclicParams) -> Result<GnrRecord> {
    let g = p.g();
    if p.d % g != 0 {
        return Err(ClassifyError::Hypothesis(format!(
            "gcd(rd, n+1) = {g} does not divide d = {}",
            p.d
        )));
    }
    Ok(GnrRecord {
        simple_cyclic_gnr_exists: g == 1,
        guaranteed_multiple: g,
    })
}

//! Classifiers for the stack `H_{1,3,d₁,d₂}` of cyclic triple covers of `P¹`.
//!
//! The structure group is `Γ(l₁, l₂)`, whose characters are pairs `(x, y)`
//! standing for `α^x·det^y`. Membership in the character lattice of
//! `Γ(a, b)` is `b | x` and `a | 2y − x`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{ClassifyError, Result};
use crate::lattice::{
    express_in_basis, hermite_normal_form, integer_kernel, lattice_index, solve_linear_congruences,
    Congruence, CongruenceWitness, IntMatrix, LatticeIndex, LinearForm,
};
use crate::verdict::{Reason, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleCoverParams {
    d1: u64,
    d2: u64,
    l1: u64,
    l2: u64,
}

impl TripleCoverParams {
    /// Requires `l₁, l₂ ≥ 4`.
    pub fn new(d1: u64, d2: u64) -> Result<Self> {
        Self::with_min_branch(d1, d2, 4)
    }

    /// Accepts `l₁, l₂ ≥ 3`, where binary forms still have finite
    /// stabilizers and every lattice computation below is defined.
    pub fn relaxed(d1: u64, d2: u64) -> Result<Self> {
        Self::with_min_branch(d1, d2, 3)
    }

    fn with_min_branch(d1: u64, d2: u64, min: i128) -> Result<Self> {
        let l1 = 2 * d1 as i128 - d2 as i128;
        let l2 = 2 * d2 as i128 - d1 as i128;
        if l1 < min || l2 < min {
            let relaxed = if min < 4 { format!(", relaxed bound {min}") } else { String::new() };
            return Err(ClassifyError::Domain(format!(
                "requires 2d1−d2 ≥ 4 and 2d2−d1 ≥ 4 (got l1 = {l1}, l2 = {l2}{relaxed})"
            )));
        }
        let (l1, l2) = (l1 as u64, l2 as u64);
        debug_assert_eq!(3 * d1, 2 * l1 + l2);
        debug_assert_eq!(3 * d2, l1 + 2 * l2);
        Ok(Self { d1, d2, l1, l2 })
    }

    /// `l₁, l₂ ≥ 4`
    pub fn meets_standing_assumption(&self) -> bool {
        self.l1 >= 4 && self.l2 >= 4
    }

    /// From branch degrees: `d₁ = (2l₁ + l₂)/3`, `d₂ = (l₁ + 2l₂)/3`.
    pub fn from_branch_degrees(l1: u64, l2: u64) -> Result<Self> {
        if (2 * l1 + l2) % 3 != 0 {
            return Err(ClassifyError::Domain(format!(
                "requires l1 ≡ l2 mod 3 (got l1 = {l1}, l2 = {l2})"
            )));
        }
        Self::new((2 * l1 + l2) / 3, (l1 + 2 * l2) / 3)
    }

    pub fn d1(&self) -> u64 {
        self.d1
    }

    pub fn d2(&self) -> u64 {
        self.d2
    }

    pub fn l1(&self) -> u64 {
        self.l1
    }

    pub fn l2(&self) -> u64 {
        self.l2
    }
}

impl fmt::Display for TripleCoverParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d1={}, d2={})", self.d1, self.d2)
    }
}

/// The character `α^x·det^y`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaCharacter {
    #[serde(with = "crate::serde_dec")]
    pub x: BigInt,
    #[serde(with = "crate::serde_dec")]
    pub y: BigInt,
}

impl GammaCharacter {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }

    /// `b | x` and `a | 2y − x`
    pub fn lies_in(&self, a: u64, b: u64) -> bool {
        let two_y_minus_x = BigInt::from(2) * &self.y - &self.x;
        self.x.is_multiple_of(&BigInt::from(b)) && two_y_minus_x.is_multiple_of(&BigInt::from(a))
    }

    fn to_vec(&self) -> Vec<BigInt> {
        vec![self.x.clone(), self.y.clone()]
    }
}

impl fmt::Display for GammaCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Basis of the character lattice of `Γ(a, b)` inside `Z²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeBasis {
    pub a: u64,
    pub b: u64,
    pub basis: [GammaCharacter; 2],
}

impl LatticeBasis {
    /// Basis vectors as matrix columns.
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(&[self.basis[0].to_vec(), self.basis[1].to_vec()])
            .expect("two columns of length two")
    }

    /// Integer-solvability of `chi` in the basis.
    pub fn contains(&self, chi: &GammaCharacter) -> bool {
        let v = IntMatrix::from_columns(&[chi.to_vec()]).expect("one column");
        express_in_basis(&v, &self.matrix()).is_ok()
    }

    /// Coordinates of `chi` in the basis.
    pub fn coordinates(&self, chi: &GammaCharacter) -> Result<[BigInt; 2]> {
        let v = IntMatrix::from_columns(&[chi.to_vec()]).expect("one column");
        let c = express_in_basis(&v, &self.matrix()).map_err(|_| membership(chi, self.a, self.b))?;
        Ok([c[(0, 0)].clone(), c[(1, 0)].clone()])
    }

    /// Mutual containment of the two bases.
    pub fn same_lattice(&self, other: &[GammaCharacter; 2]) -> bool {
        other.iter().all(|v| self.contains(v)) && {
            let o = LatticeBasis {
                a: self.a,
                b: self.b,
                basis: other.clone(),
            };
            self.basis.iter().all(|v| o.contains(v))
        }
    }

    pub fn index_in_z2(&self) -> BigInt {
        self.matrix().determinant().expect("square").abs()
    }
}

fn membership(chi: &GammaCharacter, a: u64, b: u64) -> ClassifyError {
    ClassifyError::Membership {
        x: chi.x.to_string(),
        y: chi.y.to_string(),
        a,
        b,
    }
}

/// Hermite-reduced basis of `{(x, y) : b | x, a | 2y − x}`, obtained as the
/// projection of the integer kernel of `[[1, 0, b, 0], [−1, 2, 0, a]]`.
pub fn gamma_char_lattice(a: u64, b: u64) -> Result<LatticeBasis> {
    if a == 0 || b == 0 {
        return Err(ClassifyError::Domain("requires a, b ≥ 1".into()));
    }
    let (a_, b_) = (a as i128, b as i128);
    let system = IntMatrix::from_rows(&[&[1i128, 0, b_, 0][..], &[-1, 2, 0, a_][..]]);
    let mut gens = Vec::new();
    let mut rows = 0;
    for k in integer_kernel(&system) {
        gens.extend(k[..2].iter().cloned());
        rows += 1;
    }
    let hnf = hermite_normal_form(&IntMatrix::new(rows, 2, gens)?);
    if hnf.rank() != 2 {
        return Err(ClassifyError::Internal(format!(
            "character lattice of Gamma({a}, {b}) has rank {}",
            hnf.rank()
        )));
    }
    let f = &hnf.form;
    let basis = [
        GammaCharacter::new(f[(0, 0)].clone(), f[(0, 1)].clone()),
        GammaCharacter::new(f[(1, 0)].clone(), f[(1, 1)].clone()),
    ];
    if !basis.iter().all(|v| v.lies_in(a, b)) {
        return Err(ClassifyError::Internal(format!(
            "basis of Gamma({a}, {b}) fails the membership conditions"
        )));
    }
    Ok(LatticeBasis { a, b, basis })
}

/// Closed-form generators: `(b, b/2), (0, a/2)` when `a`, `b` are both even,
/// `(b, b(a+1)/2), (0, a)` when `a` is odd. No closed form otherwise.
pub fn printed_basis(a: u64, b: u64) -> Option<[GammaCharacter; 2]> {
    if a % 2 == 0 && b % 2 == 0 {
        Some([GammaCharacter::new(b, b / 2), GammaCharacter::new(0, a / 2)])
    } else if a % 2 == 1 {
        Some([
            GammaCharacter::new(b, BigInt::from(b) * BigInt::from(a + 1) / 2),
            GammaCharacter::new(0, a),
        ])
    } else {
        None
    }
}

/// Integers with `l₁ | 2k₂ − k₁ + d₁`, `l₁ | 2k₂′ − k₁′ + d₂`, `l₂ | k₁`,
/// `l₂ | k₁′`, and `s`, `t` the two quotients by `l₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleHomWitness {
    /// 1: both even, 2: both odd, 3: d₁ even and d₂ odd, 4: d₁ odd and d₂ even
    pub parity_case: u8,
    #[serde(with = "crate::serde_dec")]
    pub k1: BigInt,
    #[serde(with = "crate::serde_dec")]
    pub k2: BigInt,
    #[serde(with = "crate::serde_dec")]
    pub k1p: BigInt,
    #[serde(with = "crate::serde_dec")]
    pub k2p: BigInt,
    #[serde(with = "crate::serde_dec")]
    pub s: BigInt,
    #[serde(with = "crate::serde_dec")]
    pub t: BigInt,
    pub witness: CongruenceWitness,
}

impl TripleHomWitness {
    /// Re-checks the four divisibilities directly.
    pub fn satisfies(&self, p: &TripleCoverParams) -> bool {
        let (l1, l2) = (BigInt::from(p.l1), BigInt::from(p.l2));
        let two = BigInt::from(2);
        let e1 = &two * &self.k2 - &self.k1 + p.d1;
        let e2 = &two * &self.k2p - &self.k1p + p.d2;
        e1.is_multiple_of(&l1)
            && e2.is_multiple_of(&l1)
            && self.k1.is_multiple_of(&l2)
            && self.k1p.is_multiple_of(&l2)
            && e1 == &self.s * &l1
            && e2 == &self.t * &l1
    }
}

fn hom_system(p: &TripleCoverParams) -> Vec<Congruence> {
    vec![
        Congruence::new(
            LinearForm::new().term("k1", -1).term("k2", 2).constant(p.d1),
            p.l1,
        ),
        Congruence::new(
            LinearForm::new().term("k1p", -1).term("k2p", 2).constant(p.d2),
            p.l1,
        ),
        Congruence::new(LinearForm::new().term("k1", 1), p.l2),
        Congruence::new(LinearForm::new().term("k1p", 1), p.l2),
    ]
}

/// Case-by-case choice: `k₁′ = 0` always, `k₁ = l₂` exactly when `d₁` is odd
/// and `d₂` even, and `k₂`, `k₂′` the least residues that then work.
fn case_witness(p: &TripleCoverParams) -> (u8, [u64; 4]) {
    let case = match (p.d1 % 2, p.d2 % 2) {
        (0, 0) => 1,
        (1, 1) => 2,
        (0, 1) => 3,
        _ => 4,
    };
    let k1 = if case == 4 { p.l2 } else { 0 };
    let least_k2 = |k1: u64, d: u64| {
        (0..p.l1)
            .find(|k2| (2 * k2 + d + p.l1 * p.l2 - k1) % p.l1 == 0)
            .expect("parity analysis guarantees a solution")
    };
    (case, [k1, least_k2(k1, p.d1), 0, least_k2(0, p.d2)])
}

pub fn triple_hom_witness(p: &TripleCoverParams) -> Result<TripleHomWitness> {
    let (case, [k1, k2, k1p, k2p]) = case_witness(p);
    let system = hom_system(p);
    let from_case = |name: &str| match name {
        "k1" => BigInt::from(k1),
        "k2" => BigInt::from(k2),
        "k1p" => BigInt::from(k1p),
        _ => BigInt::from(k2p),
    };
    if !system
        .iter()
        .all(|c| c.form.evaluate(from_case).is_multiple_of(&c.modulus))
    {
        return Err(ClassifyError::Internal(format!(
            "parity case {case} choice fails for {p}"
        )));
    }
    let witness = solve_linear_congruences(&system)?.ok_or_else(|| {
        ClassifyError::Internal(format!("homomorphism system unsolvable for {p}"))
    })?;
    let get = |v: &str| witness.get(v).cloned().unwrap_or_default();
    let (k1, k2, k1p, k2p) = (get("k1"), get("k2"), get("k1p"), get("k2p"));
    let l1 = BigInt::from(p.l1);
    let s = (BigInt::from(2) * &k2 - &k1 + p.d1) / &l1;
    let t = (BigInt::from(2) * &k2p - &k1p + p.d2) / &l1;
    let out = TripleHomWitness {
        parity_case: case,
        k1,
        k2,
        k1p,
        k2p,
        s,
        t,
        witness,
    };
    if !out.satisfies(p) {
        return Err(ClassifyError::Internal(format!("witness check failed for {p}")));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleFamily {
    pub exists: bool,
    pub brauer_severi_zariski_trivial: bool,
}

/// The Brauer–Severi scheme is trivial unless `d₁`, `d₂` are both even.
///
/// Cross-checked against solvability of `l₁ | 2k₂ − k₁ + 1`, `l₂ | k₁`.
pub fn tautological_family_triple(p: &TripleCoverParams) -> Result<TripleFamily> {
    let trivial = !(p.d1 % 2 == 0 && p.d2 % 2 == 0);
    let system = [
        Congruence::new(
            LinearForm::new().term("k1", -1).term("k2", 2).constant(1),
            p.l1,
        ),
        Congruence::new(LinearForm::new().term("k1", 1), p.l2),
    ];
    if solve_linear_congruences(&system)?.is_some() != trivial {
        return Err(ClassifyError::Internal(format!(
            "parity rule and congruence solver disagree for {p}"
        )));
    }
    Ok(TripleFamily {
        exists: true,
        brauer_severi_zariski_trivial: trivial,
    })
}

/// Pullback of a `Γ(l₁, l₂)` character along `Γ(d₁, d₂) → Γ(l₁, l₂)`:
/// `(x, y) ↦ (d₂·((x − 2y)/l₁ + 2x/l₂), y)`.
pub fn pullback_character(p: &TripleCoverParams, chi: &GammaCharacter) -> Result<GammaCharacter> {
    if !chi.lies_in(p.l1, p.l2) {
        return Err(membership(chi, p.l1, p.l2));
    }
    let l1 = BigInt::from(p.l1);
    let l2 = BigInt::from(p.l2);
    let (q1, r1) = (&chi.x - BigInt::from(2) * &chi.y).div_rem(&l1);
    let (q2, r2) = (BigInt::from(2) * &chi.x).div_rem(&l2);
    if !r1.is_zero() || !r2.is_zero() {
        return Err(ClassifyError::Internal(format!(
            "pullback of {chi} is not integral for {p}"
        )));
    }
    let image = GammaCharacter::new(BigInt::from(p.d2) * (q1 + q2), chi.y.clone());
    if !image.lies_in(p.d1, p.d2) {
        return Err(ClassifyError::Internal(format!(
            "pullback {image} of {chi} leaves Gamma({}, {})",
            p.d1, p.d2
        )));
    }
    Ok(image)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityRecord {
    #[serde(with = "crate::serde_dec")]
    pub index: BigInt,
    pub strictly_greater_than_one: bool,
    pub source_basis: LatticeBasis,
    pub target_basis: LatticeBasis,
    /// Column `j` holds the image of source basis vector `j` in target coordinates.
    pub image_matrix: IntMatrix,
    /// Same images in the closed-form bases, when both have one.
    pub printed_image_matrix: Option<IntMatrix>,
    /// Determinant value quoted alongside the closed-form matrix in the
    /// both-even case; it disagrees with `index`.
    pub reference_determinant: Option<u64>,
}

impl InjectivityRecord {
    pub fn matches_reference(&self) -> bool {
        self.reference_determinant
            .map_or(true, |r| self.index == BigInt::from(r))
    }
}

/// Index of the pulled-back character lattice of `Γ(l₁, l₂)` inside that of
/// `Γ(d₁, d₂)`.
pub fn pic_injectivity_index(p: &TripleCoverParams) -> Result<InjectivityRecord> {
    let source = gamma_char_lattice(p.l1, p.l2)?;
    let target = gamma_char_lattice(p.d1, p.d2)?;
    let images = source
        .basis
        .iter()
        .map(|v| pullback_character(p, v).map(|w| w.to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let images = IntMatrix::from_columns(&images)?;
    let image_matrix = express_in_basis(&images, &target.matrix())?;
    let index = match lattice_index(&images, &target.matrix())? {
        LatticeIndex::Finite(i) => i,
        LatticeIndex::Infinite => return Err(ClassifyError::InjectivityFailure),
    };

    let printed_image_matrix = match (printed_basis(p.l1, p.l2), printed_basis(p.d1, p.d2)) {
        (Some(src), Some(tgt)) => {
            let src_images = src
                .iter()
                .map(|v| pullback_character(p, v).map(|w| w.to_vec()))
                .collect::<Result<Vec<_>>>()?;
            let tgt_matrix = IntMatrix::from_columns(&[tgt[0].to_vec(), tgt[1].to_vec()])?;
            Some(express_in_basis(
                &IntMatrix::from_columns(&src_images)?,
                &tgt_matrix,
            )?)
        }
        _ => None,
    };
    let both_even = p.d1 % 2 == 0 && p.d2 % 2 == 0;
    Ok(InjectivityRecord {
        strictly_greater_than_one: index > BigInt::one(),
        index,
        source_basis: source,
        target_basis: target,
        image_matrix,
        printed_image_matrix,
        reference_determinant: both_even.then_some(5),
    })
}

/// Always `Yes`: no tautological family exists over `M⁰_{1,3,d₁,d₂}`.
pub fn no_section_over_m0_triple(p: &TripleCoverParams) -> Result<Verdict> {
    let inj = pic_injectivity_index(p)?;
    if !inj.strictly_greater_than_one {
        return Err(ClassifyError::Internal(format!(
            "Picard pullback is an isomorphism for {p}"
        )));
    }
    Ok(Verdict::yes(vec![
        Reason::new(
            "codim-triple",
            "the locus of triple covers with extra automorphisms has codimension ≥ 2 in M_{1,3,d1,d2}",
        ),
        Reason::new(
            "pic-injective-strict",
            format!(
                "the character pullback Γ(l1,l2) → Γ(d1,d2) is injective of index {} > 1, so no section over M⁰ lifts",
                inj.index
            ),
        ),
    ]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleStructureFlags {
    pub unirational: bool,
    pub fibered_over_rational_base: bool,
    pub fibers_rational_in_char_zero: bool,
    pub g13_exists: bool,
    pub two_g13_exists: bool,
}

pub fn triple_structure_flags(p: &TripleCoverParams) -> TripleStructureFlags {
    TripleStructureFlags {
        unirational: true,
        fibered_over_rational_base: true,
        fibers_rational_in_char_zero: true,
        g13_exists: p.d1 % 2 == 1 || p.d2 % 2 == 1,
        two_g13_exists: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(d1: u64, d2: u64) -> TripleCoverParams {
        TripleCoverParams::relaxed(d1, d2).unwrap()
    }

    fn chi(x: i64, y: i64) -> GammaCharacter {
        GammaCharacter::new(x, y)
    }

    #[test]
    fn params_validation() {
        assert!(TripleCoverParams::new(4, 4).is_ok());
        let err = TripleCoverParams::new(3, 3).unwrap_err();
        assert!(err.to_string().contains("2d1−d2 ≥ 4"));
        assert!(TripleCoverParams::new(8, 3).is_err());
        assert!(TripleCoverParams::new(5, 4).is_err());
        assert!(!params(5, 4).meets_standing_assumption());
        assert!(TripleCoverParams::relaxed(2, 2).is_err());
        let p = TripleCoverParams::from_branch_degrees(6, 6).unwrap();
        assert_eq!((p.d1(), p.d2()), (6, 6));
        let p = TripleCoverParams::from_branch_degrees(6, 3);
        assert!(p.is_err());
        let p = params(5, 4);
        assert_eq!((p.d1(), p.d2()), (5, 4));
        assert!(TripleCoverParams::from_branch_degrees(5, 4).is_err());
    }

    #[test]
    fn lattice_examples() {
        let l = gamma_char_lattice(4, 4).unwrap();
        assert!(l.same_lattice(&[chi(4, 2), chi(0, 2)]));
        let l = gamma_char_lattice(1, 1).unwrap();
        assert!(l.same_lattice(&[chi(1, 0), chi(0, 1)]));
        let l = gamma_char_lattice(5, 4).unwrap();
        assert!(l.same_lattice(&[chi(4, 12), chi(0, 5)]));
        assert_eq!(l.index_in_z2(), BigInt::from(20));
        assert!(gamma_char_lattice(0, 3).is_err());
    }

    #[test]
    fn printed_bases_match() {
        for (a, b) in [(4, 4), (6, 8), (5, 4), (7, 3), (1, 6)] {
            let l = gamma_char_lattice(a, b).unwrap();
            assert!(l.same_lattice(&printed_basis(a, b).unwrap()), "({a}, {b})");
        }
        assert!(printed_basis(4, 3).is_none());
    }

    #[test]
    fn witness_examples() {
        let w = triple_hom_witness(&params(4, 4)).unwrap();
        assert_eq!(w.parity_case, 1);
        assert!([&w.k1, &w.k2, &w.k1p, &w.k2p].iter().all(|k| k.is_zero()));
        assert_eq!((w.s.clone(), w.t.clone()), (BigInt::one(), BigInt::one()));

        let w = triple_hom_witness(&params(5, 5)).unwrap();
        assert_eq!(w.parity_case, 2);
        assert!(w.k1.is_zero() && w.k1p.is_zero());
        assert!(w.s.is_odd() && w.t.is_odd());

        let p = params(5, 4);
        let w = triple_hom_witness(&p).unwrap();
        assert_eq!(w.parity_case, 4);
        assert_eq!(w.k1, BigInt::from(p.l2()));
        assert!(w.k1p.is_zero());
        assert!(w.satisfies(&p) && w.witness.holds());
    }

    #[test]
    fn family_examples() {
        let f = tautological_family_triple(&params(4, 4)).unwrap();
        assert!(f.exists && !f.brauer_severi_zariski_trivial);
        assert!(tautological_family_triple(&params(5, 4)).unwrap().brauer_severi_zariski_trivial);
        assert!(tautological_family_triple(&params(5, 5)).unwrap().brauer_severi_zariski_trivial);
    }

    #[test]
    fn pullback_examples() {
        let p = params(4, 4);
        assert_eq!(pullback_character(&p, &chi(4, 2)).unwrap(), chi(8, 2));
        assert_eq!(pullback_character(&p, &chi(0, 2)).unwrap(), chi(-4, 2));
        assert_eq!(pullback_character(&params(7, 5), &chi(0, 0)).unwrap(), chi(0, 0));
        assert!(matches!(
            pullback_character(&p, &chi(1, 0)),
            Err(ClassifyError::Membership { .. })
        ));
    }

    #[test]
    fn injectivity_examples() {
        let rec = pic_injectivity_index(&params(4, 4)).unwrap();
        assert_eq!(
            rec.printed_image_matrix.as_ref().unwrap(),
            &IntMatrix::from_rows(&[&[2i64, -1], &[-1, 2]])
        );
        assert_eq!(rec.index, BigInt::from(3));
        assert!(rec.strictly_greater_than_one);
        assert!(!rec.matches_reference());
        let rec = pic_injectivity_index(&params(5, 5)).unwrap();
        assert!(rec.strictly_greater_than_one);
        assert!(rec.matches_reference());
    }

    #[test]
    fn section_and_flags() {
        for (d1, d2) in [(4, 4), (5, 4), (5, 5)] {
            assert!(no_section_over_m0_triple(&params(d1, d2)).unwrap().is_yes());
        }
        assert!(!triple_structure_flags(&params(4, 4)).g13_exists);
        assert!(triple_structure_flags(&params(5, 4)).g13_exists);
        assert!(triple_structure_flags(&params(5, 5)).two_g13_exists);
    }
}

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use stackycovers_core::oracle::{oracle_parity_solver, SweepBox};
use stackycovers_core::triple_cover::*;

fn valid(max: u64) -> Vec<TripleCoverParams> {
    SweepBox {
        d1: 1..=max,
        d2: 1..=max,
        ..SweepBox::default()
    }
    .triple_params()
}

proptest! {
    #[test]
    fn membership_is_divisibility(a in 1u64..=12, b in 1u64..=12, sx in -1.0f64..1.0, sy in -1.0f64..1.0) {
        let bound = (3 * a * b) as f64;
        let (x, y) = ((sx * bound) as i64, (sy * bound) as i64);
        let lattice = gamma_char_lattice(a, b).unwrap();
        let chi = GammaCharacter::new(x, y);
        let divisible = x % b as i64 == 0 && (2 * y - x) % a as i64 == 0;
        prop_assert_eq!(lattice.contains(&chi), divisible);
    }
}

#[test]
fn membership_on_a_grid() {
    for a in 1u64..=6 {
        for b in 1u64..=6 {
            let lattice = gamma_char_lattice(a, b).unwrap();
            let m = (3 * a * b) as i64;
            for x in -m..=m {
                for y in -m..=m {
                    let chi = GammaCharacter::new(x, y);
                    assert_eq!(lattice.contains(&chi), chi.lies_in(a, b), "({a},{b}) {chi}");
                }
            }
        }
    }
}

#[test]
fn printed_bases_span_the_lattice() {
    for p in valid(40) {
        for (a, b) in [(p.l1(), p.l2()), (p.d1(), p.d2())] {
            if let Some(printed) = printed_basis(a, b) {
                assert!(gamma_char_lattice(a, b).unwrap().same_lattice(&printed), "({a},{b})");
            }
        }
    }
}

#[test]
fn witnesses_satisfy_the_system() {
    for p in valid(50) {
        let w = triple_hom_witness(&p).unwrap();
        let (l1, l2) = (BigInt::from(p.l1()), BigInt::from(p.l2()));
        let two = BigInt::from(2);
        assert_eq!(&two * &w.k2 - &w.k1 + p.d1(), &w.s * &l1, "{p}");
        assert_eq!(&two * &w.k2p - &w.k1p + p.d2(), &w.t * &l1, "{p}");
        assert_eq!(&w.k1 % &l2, BigInt::default());
        assert_eq!(&w.k1p % &l2, BigInt::default());
        assert!(w.witness.holds());
    }
}

#[test]
fn pullback_lands_in_target() {
    for p in valid(40) {
        let source = gamma_char_lattice(p.l1(), p.l2()).unwrap();
        for v in &source.basis {
            let image = pullback_character(&p, v).unwrap();
            assert!(image.lies_in(p.d1(), p.d2()), "{p} {v}");
        }
    }
}

#[test]
fn injectivity_index_is_finite_and_proper() {
    for p in valid(40) {
        let rec = pic_injectivity_index(&p).unwrap();
        assert!(rec.strictly_greater_than_one, "{p}");
        assert!(rec.index > BigInt::one());
    }
}

#[test]
fn brauer_severi_matches_parity_oracle() {
    for p in valid(50) {
        let f = tautological_family_triple(&p).unwrap();
        assert!(f.exists);
        assert_eq!(f.brauer_severi_zariski_trivial, oracle_parity_solver(p.d1(), p.d2()), "{p}");
    }
}

#[test]
fn no_section_everywhere() {
    for p in valid(30) {
        assert!(no_section_over_m0_triple(&p).unwrap().is_yes());
    }
}

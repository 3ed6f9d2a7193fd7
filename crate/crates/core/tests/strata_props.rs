use stackycovers_core::simple_cyclic::CharAssumption;
use stackycovers_core::strata::*;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|f| f * f <= n).all(|f| n % f != 0)
}

#[test]
fn p1_enumeration_is_complete() {
    for rd in 4..=60u64 {
        let rep = aut_locus_codim_p1(rd).unwrap();
        let mut expected = Vec::new();
        for p in (2..=rd).filter(|&p| is_prime(p)) {
            for i in 0..=2u8 {
                if (rd - i as u64) % p == 0 {
                    expected.push((p, i));
                }
            }
        }
        let got: Vec<_> = rep.strata.iter().map(|s| (s.p, s.i)).collect();
        assert_eq!(got, expected, "rd = {rd}");
        for s in &rep.strata {
            assert!(2 * (s.dim + 1) <= rd as i64, "rd = {rd} {s:?}");
        }
    }
}

#[test]
fn p1_codim_two_from_eight() {
    for rd in 8..=200 {
        assert!(aut_locus_codim_p1(rd).unwrap().codim >= 2, "rd = {rd}");
    }
}

#[test]
fn p2_codim_two_under_both_conventions() {
    for d in 7..=30 {
        for conv in [AmbientConvention::Standard, AmbientConvention::Printed] {
            let rep = aut_locus_codim_p2_with(d, CharAssumption::Zero, conv).unwrap();
            assert!(rep.codim_at_least_two, "d = {d} {conv:?}");
        }
    }
}

#[test]
fn p2_exceptional_pairs() {
    let mut case12 = Vec::new();
    for d in 4..=30 {
        let rep = aut_locus_codim_p2(d, CharAssumption::Zero).unwrap();
        for s in rep.violations() {
            assert!(s.case_id <= 2, "bound case {} violated at d = {d}", s.case_id);
            case12.push((s.case_id, d, s.m));
        }
    }
    case12.sort();
    assert_eq!(case12, vec![(1, 4, 3), (1, 5, 2), (2, 4, 2), (2, 6, 2)]);
}

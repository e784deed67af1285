use super::*;
use crate::order::{gen, FinPoset};

fn two_element() -> OrthoPoset {
    OrthoPoset::new(FinPoset::from_covers(2, &[(0, 1)]).unwrap(), vec![1, 0]).unwrap()
}

#[test]
fn two_element_omp_passes() {
    assert!(check_omp(&two_element()).ok());
}

#[test]
fn boolean_and_mo_pass() {
    for k in 0..=4 {
        assert!(check_omp(&boolean_omp(k).unwrap()).ok(), "2^{k}");
        assert!(check_omp(&mo_omp(k).unwrap()).ok(), "MO{k}");
    }
}

#[test]
fn hexagon_is_orthocomplemented_but_not_orthomodular() {
    let h = hexagon().unwrap();
    assert!(check_orthoposet(&h).ok());
    let r = check_omp(&h);
    assert_eq!(r.verdict("orthogonal_joins"), Some(true));
    assert_eq!(r.verdict("orthomodular_law"), Some(false));
    // 1 <= 2 but 1 ⊕ (1 ⊕ 2')' = 1 ⊕ 0 = 1.
    assert!(r
        .witnesses_for("orthomodular_law")
        .any(|w| w.tuple == vec![1, 2, 1]));
}

#[test]
fn broken_ocomp_is_witnessed() {
    // 2^2 with the identity as "complement".
    let l = gen::boolean(2).unwrap();
    let p = OrthoPoset::from_lattice(&l, vec![0, 1, 2, 3]).unwrap();
    let r = check_orthoposet(&p);
    assert_eq!(r.verdict("period_two"), Some(true));
    assert_eq!(r.verdict("order_inverting"), Some(false));
    assert_eq!(r.verdict("complement_bounds"), Some(false));
}

#[test]
fn two_element_oa() {
    let a = OrthoAlgebra::from_triples(2, 0, 1, [(0, 0, 0), (0, 1, 1), (1, 0, 1)]).unwrap();
    assert!(check_oa(&a).ok());
    let (p, is_omp) = oa_to_orthoposet(&a).unwrap();
    assert!(is_omp);
    assert_eq!(p, two_element());
}

#[test]
fn injected_one_plus_one_fails_self_sum() {
    let a = OrthoAlgebra::from_triples(2, 0, 1, [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]).unwrap();
    let r = check_oa(&a);
    assert_eq!(r.verdict("self_sum_zero"), Some(false));
    assert!(r.witnesses_for("self_sum_zero").any(|w| w.tuple == vec![1]));
    assert!(matches!(oa_to_orthoposet(&a), Err(crate::Error::NotAnOa(_))));
}

#[test]
fn boolean_oa_complements() {
    let p = boolean_omp(2).unwrap();
    let a = omp_to_oa(&p).unwrap();
    assert!(check_oa(&a).ok());
    assert_eq!(a.oplus(1, 2), Some(3));
    assert_eq!(a.oplus(2, 1), Some(3));
    assert_eq!(a.oplus(1, 1), None);
    assert_eq!(a.complement(1), Some(2));
}

#[test]
fn mo2_orthogonality_is_only_between_paired_atoms() {
    let p = mo_omp(2).unwrap();
    let a = omp_to_oa(&p).unwrap();
    for x in 1..=4 {
        for y in 1..=4 {
            let paired = p.ocomp(x) == y;
            assert_eq!(a.oplus(x, y).is_some(), paired, "{x} ⊕ {y}");
            if paired {
                assert_eq!(a.oplus(x, y), Some(5));
            }
        }
    }
}

#[test]
fn hexagon_has_no_oa() {
    assert!(matches!(omp_to_oa(&hexagon().unwrap()), Err(crate::Error::NotAnOmp(_))));
}

#[test]
fn round_trip_is_identity() {
    for p in [boolean_omp(3).unwrap(), mo_omp(3).unwrap(), two_element()] {
        let (q, is_omp) = oa_to_orthoposet(&omp_to_oa(&p).unwrap()).unwrap();
        assert!(is_omp);
        assert_eq!(q, p);
    }
}

#[test]
fn wright_triangle_is_an_oa_but_not_an_omp() {
    let w = wright_triangle();
    assert!(check_oa(&w).ok(), "{}", check_oa(&w));
    let (p, is_omp) = oa_to_orthoposet(&w).unwrap();
    assert!(!is_omp);
    assert!(check_orthoposet(&p).ok());
    // a ⊕ c = b' and e' are both upper bounds of a and c; neither is below the other.
    assert_eq!(w.oplus(1, 3), Some(8));
    assert!(p.leq(1, 11) && p.leq(3, 11));
    assert!(!p.leq(8, 11) && !p.leq(11, 8));
}

#[test]
fn oa_sums_are_minimal_upper_bounds() {
    let w = wright_triangle();
    let (p, _) = oa_to_orthoposet(&w).unwrap();
    for (x, y, v) in w.triples() {
        let ub = p.poset().upper_bounds(x, y);
        assert!(ub.contains(v));
        assert!(ub.ones().all(|u| u == v || !p.leq(u, v)));
    }
}

#[test]
fn omp_intervals() {
    let p = boolean_omp(3).unwrap();
    let whole = interval_omp(&p, p.top()).unwrap();
    assert_eq!(whole.omp, p);
    let point = interval_omp(&p, p.bot()).unwrap();
    assert_eq!(point.omp.len(), 1);
    assert!(check_omp(&point.omp).ok());
    let coatom = interval_omp(&p, 0b011).unwrap();
    assert_eq!(coatom.embed, vec![0, 1, 2, 3]);
    let iso = omp_iso(&coatom.omp, &boolean_omp(2).unwrap()).unwrap();
    assert!(iso.is_some());
}

#[test]
fn omp_interval_ocomp_is_relative_complement() {
    for p in [boolean_omp(3).unwrap(), mo_omp(3).unwrap()] {
        let a_oa = omp_to_oa(&p).unwrap();
        for a in 0..p.len() {
            let i = interval_omp(&p, a).unwrap();
            assert!(check_omp(&i.omp).ok());
            for (local, &b) in i.embed.iter().enumerate() {
                let sharp = i.embed[i.omp.ocomp(local)];
                let d: Vec<usize> = i
                    .embed
                    .iter()
                    .copied()
                    .filter(|&d| a_oa.oplus(b, d) == Some(a))
                    .collect();
                assert_eq!(d, vec![sharp]);
            }
        }
    }
}

#[test]
fn oa_intervals() {
    let a = omp_to_oa(&boolean_omp(3).unwrap()).unwrap();
    let whole = interval_oa(&a, a.one()).unwrap();
    assert_eq!(whole.oa, a);
    let point = interval_oa(&a, a.zero()).unwrap();
    assert_eq!(point.oa.len(), 1);
    assert!(check_oa(&point.oa).ok());
    let coatom = interval_oa(&a, 0b110).unwrap();
    assert_eq!(coatom.escaped, 0);
    let target = omp_to_oa(&boolean_omp(2).unwrap()).unwrap();
    assert!(oa_iso(&coatom.oa, &target).unwrap().is_some());
}

#[test]
fn iso_search() {
    let b2 = boolean_omp(2).unwrap();
    let id = omp_iso(&b2, &b2).unwrap().unwrap();
    assert_eq!(id, vec![0, 1, 2, 3]);
    let mo1 = mo_omp(1).unwrap();
    let m = omp_iso(&b2, &mo1).unwrap().unwrap();
    assert!(is_omp_iso(&b2, &mo1, &m));
    assert_eq!(omp_iso(&b2, &two_element()).unwrap(), None);
    // Same size, different structure.
    assert_eq!(omp_iso(&mo_omp(3).unwrap(), &boolean_omp(3).unwrap()).unwrap(), None);
    let big = boolean_omp(5).unwrap();
    assert!(matches!(omp_iso(&big, &big), Err(crate::Error::LimitExceeded { .. })));
}

#[test]
fn oa_iso_search() {
    let w = wright_triangle();
    let m = oa_iso(&w, &w).unwrap().unwrap();
    assert!(is_oa_iso(&w, &w, &m));
    let b = omp_to_oa(&boolean_omp(3).unwrap()).unwrap();
    assert_eq!(oa_iso(&b, &omp_to_oa(&mo_omp(3).unwrap()).unwrap()).unwrap(), None);
}

#[test]
fn wright_intervals_are_oas_with_escapes() {
    // 3 and 5 lie below 7 = 1', but 3 ⊕ 5 = 4' does not.
    let w = wright_triangle();
    assert_eq!(w.oplus(3, 5), Some(10));
    assert!(w.leq(3, 7) && w.leq(5, 7) && !w.leq(10, 7));
    for a in 0..w.len() {
        let iv = interval_oa(&w, a).unwrap();
        assert!(check_oa(&iv.oa).ok(), "{a}");
        assert_eq!(iv.escaped, if [7, 9, 11].contains(&a) { 2 } else { 0 }, "{a}");
    }
}

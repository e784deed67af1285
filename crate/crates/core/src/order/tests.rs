use super::gen::*;
use super::*;
use crate::error::Error;

/// Brute-force glb: the lower bound that every lower bound sits below.
fn oracle_glb(p: &FinPoset, a: usize, b: usize) -> Option<usize> {
    let n = p.len();
    let lower: Vec<usize> = (0..n).filter(|&z| p.leq(z, a) && p.leq(z, b)).collect();
    let best: Vec<usize> = lower
        .iter()
        .copied()
        .filter(|&z| lower.iter().all(|&w| p.leq(w, z)))
        .collect();
    (best.len() == 1).then(|| best[0])
}

/// Literal triple scan of the modular law, independent of `modular_violation`.
fn oracle_modular(l: &FinLattice) -> bool {
    let n = l.len();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| !l.leq(c, b) || l.join(c, l.meet(a, b)) == l.meet(l.join(c, a), b))
        })
    })
}

#[test]
fn two_chain_is_min_max() {
    let p = FinPoset::from_covers(2, &[(0, 1)]).unwrap();
    let l = FinLattice::from_poset(p).unwrap();
    assert_eq!((l.bot(), l.top()), (0, 1));
    for a in 0..2 {
        for b in 0..2 {
            assert_eq!(l.meet(a, b), a.min(b));
            assert_eq!(l.join(a, b), a.max(b));
        }
    }
}

#[test]
fn antichain_is_not_bounded() {
    let p = FinPoset::from_pairs(2, &[]).unwrap();
    assert_eq!(FinLattice::from_poset(p).unwrap_err(), Error::NotBounded("bottom"));
}

#[test]
fn bounded_non_lattice_is_rejected() {
    // 0 < a, b < c, d < 1: a and b have two minimal upper bounds.
    let p = FinPoset::from_covers(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)])
        .unwrap();
    assert!(matches!(FinLattice::from_poset(p), Err(Error::NotALattice(1, 2, _))));
}

#[test]
fn m3_meets_and_joins_match_brute_force() {
    let p = FinPoset::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
    let l = FinLattice::from_poset(p.clone()).unwrap();
    for a in 1..4 {
        for b in 1..4 {
            if a != b {
                assert_eq!(l.meet(a, b), 0);
                assert_eq!(l.join(a, b), 4);
            }
        }
    }
    for a in 0..5 {
        for b in 0..5 {
            assert_eq!(Some(l.meet(a, b)), oracle_glb(&p, a, b));
        }
    }
    assert_eq!(l, m3().unwrap());
}

#[test]
fn modularity_of_small_lattices() {
    assert!(m3().unwrap().is_modular());
    assert!(!n5().unwrap().is_modular());
    assert!(!oracle_modular(&n5().unwrap()));
    for k in 0..=4 {
        let b = boolean(k).unwrap();
        assert!(b.is_modular() && oracle_modular(&b));
    }
    assert!(mo(3).unwrap().is_modular());
}

#[test]
fn n5_modular_pair_failure_is_witnessed() {
    // Long side 0 < 1 < 2 < 4, short side 0 < 3 < 4.
    let l = n5().unwrap();
    assert_eq!(l.modular_pair_witness(3, 2), Some(1));
    assert!(l.modular_pair(2, 3));
    // With the short-side atom as b, the only c <= b are 0 and b itself.
    assert!(l.modular_pair(1, 3));
    assert_eq!(l.dual_modular_pair_witness(3, 1), Some(2));
}

#[test]
fn bottom_pairs_are_always_modular() {
    for l in [n5().unwrap(), m3().unwrap(), chain(3).unwrap()] {
        for x in 0..l.len() {
            assert!(l.modular_pair(l.bot(), x));
            assert!(l.dual_modular_pair(l.bot(), x));
        }
    }
}

#[test]
fn symmetry_classes() {
    assert_eq!(m3().unwrap().symmetry_class(), SymmetryClass::Modular);
    assert_eq!(boolean(3).unwrap().symmetry_class(), SymmetryClass::Modular);
    assert_eq!(n5().unwrap().symmetry_class(), SymmetryClass::Neither);
    // Semimodular, not modular: the partition lattice of a 4-element set has
    // M-symmetry but not M*-symmetry.
    let parts = crate::setfact::all_partitions(4);
    let p = FinPoset::from_fn(parts.len(), |a, b| parts[a].is_finer(&parts[b])).unwrap();
    let pi4 = FinLattice::from_poset(p).unwrap();
    assert_eq!(pi4.symmetry_class(), SymmetryClass::MSymmetricOnly);
}

#[test]
fn modular_implies_all_pairs() {
    for l in [m3().unwrap(), mo(2).unwrap(), subspace_lattice(2, 3).unwrap()] {
        for a in 0..l.len() {
            for b in 0..l.len() {
                assert!(l.modular_pair(a, b) && l.dual_modular_pair(a, b));
            }
        }
    }
}

#[test]
fn intervals() {
    let l = m3().unwrap();
    let whole = l.interval(l.bot(), l.top()).unwrap();
    assert_eq!(whole.lattice, l);
    assert_eq!(l.interval(2, 2).unwrap().lattice.len(), 1);
    let below = l.interval(0, 1).unwrap();
    assert_eq!(below.embed, vec![0, 1]);
    assert_eq!(below.lattice, chain(1).unwrap());
    assert_eq!(l.interval(1, 2).unwrap_err(), Error::BadInterval { lo: 1, hi: 2 });
}

#[test]
fn intervals_of_modular_lattices_are_modular() {
    let corpus = [
        boolean(3).unwrap(),
        mo(3).unwrap(),
        subspace_lattice(2, 3).unwrap(),
        subspace_lattice(3, 2).unwrap(),
    ];
    for l in &corpus {
        for lo in 0..l.len() {
            for hi in l.poset().up(lo).ones() {
                let i = l.interval(lo, hi).unwrap();
                assert!(i.lattice.is_modular());
                assert_eq!(i.lattice, FinLattice::from_poset(i.lattice.poset().clone()).unwrap());
            }
        }
    }
}

#[test]
fn subspace_lattice_gf2_squared_is_m3() {
    let s = subspace_lattice(2, 2).unwrap();
    assert_eq!(s.len(), 5);
    assert_eq!(s.atoms().len(), 3);
    assert!(s.is_modular());
    assert_eq!(s, m3().unwrap());
}

#[test]
fn subspace_lattices_are_modular() {
    for (q, d) in [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (5, 2)] {
        let s = subspace_lattice(q, d).unwrap();
        assert!(oracle_modular(&s), "GF({q})^{d}");
    }
}

#[test]
fn size_guard_is_configurable() {
    let p = boolean(3).unwrap().poset().clone();
    assert!(matches!(
        FinLattice::from_poset_limited(p, 4),
        Err(Error::LimitExceeded { size: 8, limit: 4, .. })
    ));
}

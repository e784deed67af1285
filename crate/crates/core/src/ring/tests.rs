use proptest::prelude::*;

use super::*;
use crate::ortho::{check_omp, is_omp_iso, omp_iso, omp_to_oa, boolean_omp, mo_omp};

// Oracle: 2x2 matrices over Z/p as plain arrays.
type M2 = [[usize; 2]; 2];

fn m2_of(id: usize, p: usize) -> M2 {
    [[id % p, id / p % p], [id / p / p % p, id / p / p / p % p]]
}

fn m2_mul(a: &M2, b: &M2, p: usize) -> M2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % p;
        }
    }
    c
}

fn oracle_m2_idempotents(p: usize) -> Vec<usize> {
    (0..p.pow(4))
        .filter(|&id| {
            let a = m2_of(id, p);
            m2_mul(&a, &a, p) == a
        })
        .collect()
}

#[test]
fn cyclic_idempotents() {
    let z6 = zn(6).unwrap();
    assert_eq!(idempotents(&z6), vec![0, 1, 3, 4]);
    assert_eq!(idempotents(&zn(4).unwrap()), vec![0, 1]);
    for m in 1..=24 {
        let oracle: Vec<usize> = (0..m).filter(|&x| x * x % m == x).collect();
        assert_eq!(idempotents(&zn(m).unwrap()), oracle, "Z{m}");
    }
}

#[test]
fn generators_are_rings() {
    for m in [1, 2, 6, 12] {
        assert!(check_ring(&zn(m).unwrap()).ok());
    }
    assert!(check_ring(&product_zn(&[2, 3, 4]).unwrap()).ok());
    assert!(check_ring(&mat(2, 2).unwrap()).ok());
    assert!(check_ring(&mat(2, 3).unwrap()).ok());
}

#[test]
fn matrix_encoding() {
    let r = mat(2, 3).unwrap();
    assert_eq!(r.one(), mat_id(3, &[1, 0, 0, 1]));
    for a in 0..81 {
        for b in 0..81 {
            let expected = m2_mul(&m2_of(a, 3), &m2_of(b, 3), 3);
            assert_eq!(m2_of(r.mul(a, b), 3), expected);
        }
    }
}

#[test]
fn matrix_idempotents_match_oracle() {
    for p in [2, 3] {
        let r = mat(2, p).unwrap();
        assert_eq!(idempotents(&r), oracle_m2_idempotents(p));
    }
    assert_eq!(oracle_m2_idempotents(2).len(), 8);
}

#[test]
fn invalid_tables_rejected() {
    let add = vec![vec![0, 1], vec![1, 0]];
    let bad_mul = vec![vec![0, 0], vec![0, 0]];
    assert!(matches!(
        FinRing::new(add.clone(), bad_mul, 0, 1),
        Err(crate::Error::InvalidRing(_))
    ));
    let ok = FinRing::new(add.clone(), vec![vec![0, 0], vec![0, 1]], 0, 1).unwrap();
    assert_eq!(ok, zn(2).unwrap());
    assert!(FinRing::new(add, vec![vec![0, 0]], 0, 1).is_err());
    assert_eq!(zn(0).unwrap_err(), crate::Error::EmptySet);
}

#[test]
fn z6_is_boolean_square() {
    let r = zn(6).unwrap();
    let er = build_er(&r).unwrap();
    assert_eq!(er.elems, vec![0, 1, 3, 4]);
    let three = er.id_of(3).unwrap();
    assert_eq!(er.elems[er.omp.ocomp(three)], 4);
    assert!(check_omp(&er.omp).ok());
    assert!(omp_iso(&er.omp, &boolean_omp(2).unwrap()).unwrap().is_some());
}

#[test]
fn fields_give_two_elements() {
    for p in [2, 3, 5, 7, 11, 13] {
        assert_eq!(build_er(&zn(p).unwrap()).unwrap().len(), 2);
    }
}

#[test]
fn product_ring_is_boolean_cube() {
    let r = product_zn(&[2, 2, 2]).unwrap();
    let er = build_er(&r).unwrap();
    assert_eq!(er.len(), 8);
    assert!(omp_iso(&er.omp, &boolean_omp(3).unwrap()).unwrap().is_some());
}

fn corpus() -> Vec<FinRing> {
    let mut out: Vec<FinRing> = (1..=24).map(|m| zn(m).unwrap()).collect();
    for ms in [vec![2, 3], vec![2, 2], vec![4, 6], vec![2, 2, 2], vec![2, 3, 4], vec![3, 3, 2]] {
        out.push(product_zn(&ms).unwrap());
    }
    out.push(mat(2, 2).unwrap());
    out.push(mat(2, 3).unwrap());
    out
}

#[test]
fn er_is_omp_over_corpus() {
    for r in corpus() {
        let er = build_er(&r).unwrap();
        let rep = check_omp(&er.omp);
        assert!(rep.ok(), "ring of size {}: {rep}", r.len());
    }
}

#[test]
fn sections_green_over_corpus() {
    for r in corpus() {
        let er = build_er(&r).unwrap();
        for &e in &er.elems {
            let s = ring_section_with(&r, &er, e).unwrap();
            assert!(s.report.ok(), "ring of size {}, e = {e}: {}", r.len(), s.report);
        }
    }
}

#[test]
fn matrix_idempotents_form_mo() {
    // Rank-one idempotents are atoms paired with 1 - e.
    for (p, k) in [(2, 3), (3, 6)] {
        let er = build_er(&mat(2, p).unwrap()).unwrap();
        assert!(omp_iso(&er.omp, &mo_omp(k).unwrap()).unwrap().is_some(), "GF({p})");
    }
}

#[test]
fn commuting_orthogonal_idempotents() {
    for r in corpus() {
        let er = build_er(&r).unwrap();
        let oa = omp_to_oa(&er.omp).unwrap();
        for (i, &e) in er.elems.iter().enumerate() {
            for (j, &f) in er.elems.iter().enumerate() {
                if r.mul(e, f) == r.zero() && r.mul(f, e) == r.zero() {
                    let s = r.add(e, f);
                    assert_eq!(r.mul(s, s), s);
                    assert_eq!(oa.oplus(i, j).map(|k| er.elems[k]), Some(s));
                }
            }
        }
    }
}

#[test]
fn corners() {
    let r = zn(6).unwrap();
    let c = corner_ring(&r, 3).unwrap();
    assert_eq!(c.embed, vec![0, 3]);
    assert_eq!(c.ring, zn(2).unwrap());
    let whole = corner_ring(&r, 1).unwrap();
    assert_eq!(whole.ring, r);
    let point = corner_ring(&r, 0).unwrap();
    assert_eq!(point.ring.len(), 1);
    assert!(check_ring(&point.ring).ok());
    assert_eq!(corner_ring(&r, 2).unwrap_err(), crate::Error::NotIdempotent(2));
}

#[test]
fn z6_section() {
    let r = zn(6).unwrap();
    let s = ring_section(&r, 3).unwrap();
    assert!(s.report.ok());
    assert_eq!(s.interval, vec![0, 3]);
    assert_eq!(r.sub(3, 0), 3);
    assert_eq!(r.sub(3, 3), 0);
    let whole = ring_section(&r, 1).unwrap();
    assert_eq!(whole.interval, vec![0, 1, 3, 4]);
    assert!(matches!(ring_section(&r, 2), Err(crate::Error::NotIdempotent(2))));
}

#[test]
fn matrix_corner_section() {
    let r = mat(2, 2).unwrap();
    let e = mat_id(2, &[1, 0, 0, 0]);
    let s = ring_section(&r, e).unwrap();
    assert!(s.report.ok(), "{}", s.report);
    assert_eq!(s.interval, vec![0, e]);
    let c = corner_ring(&r, e).unwrap();
    // Oracle corner: matrices with e·x = x = x·e.
    let em = m2_of(e, 2);
    let oracle: Vec<usize> = (0..16)
        .filter(|&x| {
            let xm = m2_of(x, 2);
            m2_mul(&em, &xm, 2) == xm && m2_mul(&xm, &em, 2) == xm
        })
        .collect();
    assert_eq!(c.embed, oracle);
    let er = build_er(&r).unwrap();
    let er_c = build_er(&c.ring).unwrap();
    let embed: Vec<usize> = er_c.elems.iter().map(|&x| er.id_of(c.embed[x]).unwrap()).collect();
    let d = crate::ortho::interval_omp(&er.omp, er.id_of(e).unwrap()).unwrap();
    let map: Vec<usize> = d.embed.iter().map(|&g| embed.iter().position(|&x| x == g).unwrap()).collect();
    assert!(is_omp_iso(&d.omp, &er_c.omp, &map));
}

proptest! {
    #[test]
    fn zn_axioms(m in 1usize..=20) {
        prop_assert!(check_ring(&zn(m).unwrap()).ok());
    }

    #[test]
    fn idempotent_complement_is_idempotent(m in 1usize..=60) {
        let r = zn(m).unwrap();
        for e in idempotents(&r) {
            let c = r.sub(r.one(), e);
            prop_assert_eq!(r.mul(c, c), c);
            prop_assert_eq!(r.mul(e, c), r.zero());
        }
    }
}

//! Instance generators. Each builds its meet/join tables from the structure
//! itself (bit operations, set intersection, span), independently of the
//! order-matrix route in [`FinLattice::from_poset`].

use std::collections::HashMap;

use super::lattice::{FinLattice, DEFAULT_LATTICE_LIMIT};
use super::poset::FinPoset;
use crate::error::{Error, Result};
use crate::field::PrimeField;

fn guard(what: &'static str, size: usize) -> Result<()> {
    if size > DEFAULT_LATTICE_LIMIT {
        Err(Error::LimitExceeded {
            what,
            size,
            limit: DEFAULT_LATTICE_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// The Boolean lattice of subsets of a `k`-element set; element ids are bitmasks.
pub fn boolean(k: usize) -> Result<FinLattice> {
    if k >= usize::BITS as usize - 1 {
        return Err(Error::LimitExceeded {
            what: "boolean lattice",
            size: usize::MAX,
            limit: DEFAULT_LATTICE_LIMIT,
        });
    }
    let n = 1usize << k;
    guard("boolean lattice", n)?;
    let poset = FinPoset::from_fn(n, |a, b| a & !b == 0)?;
    let meet = (0..n * n).map(|i| (i / n) & (i % n)).collect();
    let join = (0..n * n).map(|i| (i / n) | (i % n)).collect();
    FinLattice::from_tables(poset, meet, join)
}

/// The `(k+1)`-element chain `0 < 1 < ... < k`.
pub fn chain(k: usize) -> Result<FinLattice> {
    let n = k + 1;
    guard("chain", n)?;
    let poset = FinPoset::from_fn(n, |a, b| a <= b)?;
    let meet = (0..n * n).map(|i| (i / n).min(i % n)).collect();
    let join = (0..n * n).map(|i| (i / n).max(i % n)).collect();
    FinLattice::from_tables(poset, meet, join)
}

/// Bottom `0`, atoms `1..=m`, top `m + 1`, atoms pairwise complementary.
fn diamond(m: usize) -> Result<FinLattice> {
    let n = m + 2;
    guard("diamond lattice", n)?;
    let (bot, top) = (0, m + 1);
    let poset = FinPoset::from_fn(n, |a, b| a == b || a == bot || b == top)?;
    let meet_of = |a: usize, b: usize| {
        if a == b || b == top {
            a
        } else if a == top {
            b
        } else {
            bot
        }
    };
    let join_of = |a: usize, b: usize| {
        if a == b || b == bot {
            a
        } else if a == bot {
            b
        } else {
            top
        }
    };
    let meet = (0..n * n).map(|i| meet_of(i / n, i % n)).collect();
    let join = (0..n * n).map(|i| join_of(i / n, i % n)).collect();
    FinLattice::from_tables(poset, meet, join)
}

/// The modular ortholattice MO_k: bottom 0, atoms `1..=2k`, top `2k + 1`.
/// Atoms `2i + 1` and `2i + 2` are the orthocomplementary pairs.
pub fn mo(k: usize) -> Result<FinLattice> {
    diamond(2 * k)
}

/// M3: bottom 0, three atoms 1, 2, 3, top 4.
pub fn m3() -> Result<FinLattice> {
    diamond(3)
}

/// The pentagon N5: `0 < 1 < 2 < 4` on the long side and `0 < 3 < 4`.
pub fn n5() -> Result<FinLattice> {
    let poset = FinPoset::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])?;
    FinLattice::from_poset(poset)
}

/// Subspaces of GF(q)^d ordered by inclusion. Ids are sorted by dimension,
/// then by member list; id 0 is the zero subspace and the last id is the
/// whole space.
pub fn subspace_lattice(q: usize, d: usize) -> Result<FinLattice> {
    let field = PrimeField::new(q)?;
    if d > 4 {
        return Err(Error::LimitExceeded {
            what: "vector space dimension",
            size: d,
            limit: 4,
        });
    }
    let vectors = q.pow(d as u32);
    let add = |u: usize, v: usize| {
        let (a, b) = (field.digits(u, d), field.digits(v, d));
        let s: Vec<usize> = a.iter().zip(&b).map(|(&x, &y)| field.add(x, y)).collect();
        field.undigits(&s)
    };
    let scale = |c: usize, v: usize| {
        let a: Vec<usize> = field.digits(v, d).iter().map(|&x| field.mul(c, x)).collect();
        field.undigits(&a)
    };
    // Smallest subspace containing `s` and `v`.
    let extend = |s: &[usize], v: usize| -> Vec<usize> {
        let mut out: Vec<usize> = s
            .iter()
            .flat_map(|&x| (0..q).map(move |c| (x, c)))
            .map(|(x, c)| add(x, scale(c, v)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    };

    let mut found: Vec<Vec<usize>> = vec![vec![0]];
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::from([(vec![0], ())]);
    let mut next = 0;
    while next < found.len() {
        let s = found[next].clone();
        next += 1;
        for v in 0..vectors {
            if s.binary_search(&v).is_ok() {
                continue;
            }
            let t = extend(&s, v);
            if !seen.contains_key(&t) {
                guard("subspace lattice", found.len() + 1)?;
                seen.insert(t.clone(), ());
                found.push(t);
            }
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let id: HashMap<Vec<usize>, usize> = found.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let n = found.len();
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    let poset = FinPoset::from_fn(n, |a, b| subset(&found[a], &found[b]))?;
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let inter: Vec<usize> = found[a]
                .iter()
                .copied()
                .filter(|x| found[b].binary_search(x).is_ok())
                .collect();
            meet[a * n + b] = id[&inter];
            let sum = found[b].iter().fold(found[a].clone(), |s, &v| {
                if s.binary_search(&v).is_ok() {
                    s
                } else {
                    extend(&s, v)
                }
            });
            join[a * n + b] = id[&sum];
        }
    }
    FinLattice::from_tables(poset, meet, join)
}

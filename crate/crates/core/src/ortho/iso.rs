//! Isomorphism certificates between finite orthostructures.
//!
//! The search is a backtracking over target candidates that share an
//! invariant key with the source element (height, ocomp orbit size, up-set
//! size, down-set size for orthoposets; degree and sum profile for
//! orthoalgebras). Source elements are assigned in key order; candidates are
//! tried in ascending id order, so the first bijection found is deterministic.

use crate::error::{Error, Result};

use super::oa::OrthoAlgebra;
use super::omp::OrthoPoset;

/// Carriers above this size are refused by the exhaustive search.
pub const DEFAULT_ISO_LIMIT: usize = 24;

/// True iff `map` is a bijection preserving and reflecting the order and
/// commuting with the orthocomplements and bounds.
pub fn is_omp_iso(p: &OrthoPoset, q: &OrthoPoset, map: &[usize]) -> bool {
    let n = p.len();
    if q.len() != n || map.len() != n || !is_bijection(map, n) {
        return false;
    }
    map[p.bot()] == q.bot()
        && map[p.top()] == q.top()
        && (0..n).all(|x| map[p.ocomp(x)] == q.ocomp(map[x]))
        && (0..n).all(|x| (0..n).all(|y| p.leq(x, y) == q.leq(map[x], map[y])))
}

/// True iff `map` is a bijection with `x ⊕ y` defined exactly when
/// `map x ⊕ map y` is, with matching values, and preserving the constants.
pub fn is_oa_iso(a: &OrthoAlgebra, b: &OrthoAlgebra, map: &[usize]) -> bool {
    let n = a.len();
    if b.len() != n || map.len() != n || !is_bijection(map, n) {
        return false;
    }
    map[a.zero()] == b.zero()
        && map[a.one()] == b.one()
        && a.defined_count() == b.defined_count()
        && a
            .triples()
            .all(|(x, y, v)| b.oplus(map[x], map[y]) == Some(map[v]))
}

fn is_bijection(map: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    for &y in map {
        if y >= n || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    true
}

fn guard(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::LimitExceeded {
            what: "isomorphism search carrier",
            size: n,
            limit,
        })
    } else {
        Ok(())
    }
}

fn omp_keys(p: &OrthoPoset) -> Vec<[usize; 4]> {
    let h = p.poset().heights();
    (0..p.len())
        .map(|x| {
            let orbit = if p.ocomp(x) == x { 1 } else { 2 };
            [
                h[x],
                orbit,
                p.poset().up(x).count_ones(..),
                p.poset().down(x).count_ones(..),
            ]
        })
        .collect()
}

fn oa_keys(a: &OrthoAlgebra) -> Vec<[usize; 4]> {
    let n = a.len();
    let mut as_value = vec![0; n];
    for (_, _, v) in a.triples() {
        as_value[v] += 1;
    }
    (0..n)
        .map(|x| {
            let role = if x == a.zero() {
                0
            } else if x == a.one() {
                1
            } else {
                2
            };
            [role, a.partners(x).count(), as_value[x], usize::from(a.oplus(x, x).is_some())]
        })
        .collect()
}

/// Generic backtracking: `consistent(x, fx, y, fy)` must hold for every
/// pair of assigned elements (including `x == y`).
fn search<K: Ord + Clone>(
    src_keys: &[K],
    dst_keys: &[K],
    consistent: impl Fn(usize, usize, usize, usize) -> bool,
    accept: impl Fn(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let n = src_keys.len();
    if n == 0 {
        return accept(&[]).then(Vec::new);
    }
    let mut sk: Vec<K> = src_keys.to_vec();
    let mut dk: Vec<K> = dst_keys.to_vec();
    sk.sort();
    dk.sort();
    if sk != dk {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| src_keys[x].cmp(&src_keys[y]).then(x.cmp(&y)));
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| dst_keys[y] == src_keys[x]).collect())
        .collect();

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut cursor = vec![0usize; n];
    let mut depth = 0;
    loop {
        if depth == n {
            if accept(&map) {
                return Some(map);
            }
            depth -= 1;
            let x = order[depth];
            used[map[x]] = false;
            map[x] = usize::MAX;
            cursor[depth] += 1;
            continue;
        }
        let x = order[depth];
        let mut placed = false;
        while cursor[depth] < candidates[x].len() {
            let fx = candidates[x][cursor[depth]];
            if !used[fx]
                && order[..depth]
                    .iter()
                    .all(|&y| consistent(x, fx, y, map[y]))
                && consistent(x, fx, x, fx)
            {
                map[x] = fx;
                used[fx] = true;
                placed = true;
                break;
            }
            cursor[depth] += 1;
        }
        if placed {
            depth += 1;
            if depth < n {
                cursor[depth] = 0;
            }
        } else {
            cursor[depth] = 0;
            if depth == 0 {
                return None;
            }
            depth -= 1;
            let y = order[depth];
            used[map[y]] = false;
            map[y] = usize::MAX;
            cursor[depth] += 1;
        }
    }
}

/// Finds an orthoposet isomorphism `p -> q`, or `None` after exhaustive search.
pub fn omp_iso(p: &OrthoPoset, q: &OrthoPoset) -> Result<Option<Vec<usize>>> {
    omp_iso_limited(p, q, DEFAULT_ISO_LIMIT)
}

pub fn omp_iso_limited(p: &OrthoPoset, q: &OrthoPoset, limit: usize) -> Result<Option<Vec<usize>>> {
    if p.len() != q.len() {
        return Ok(None);
    }
    guard(p.len(), limit)?;
    let found = search(
        &omp_keys(p),
        &omp_keys(q),
        |x, fx, y, fy| {
            p.leq(x, y) == q.leq(fx, fy)
                && p.leq(y, x) == q.leq(fy, fx)
                && (p.ocomp(x) != y || q.ocomp(fx) == fy)
                && (q.ocomp(fx) != fy || p.ocomp(x) == y)
        },
        |map| is_omp_iso(p, q, map),
    );
    Ok(found)
}

/// Finds an orthoalgebra isomorphism `a -> b`, or `None` after exhaustive search.
pub fn oa_iso(a: &OrthoAlgebra, b: &OrthoAlgebra) -> Result<Option<Vec<usize>>> {
    oa_iso_limited(a, b, DEFAULT_ISO_LIMIT)
}

pub fn oa_iso_limited(a: &OrthoAlgebra, b: &OrthoAlgebra, limit: usize) -> Result<Option<Vec<usize>>> {
    if a.len() != b.len() {
        return Ok(None);
    }
    guard(a.len(), limit)?;
    let found = search(
        &oa_keys(a),
        &oa_keys(b),
        |x, fx, y, fy| a.oplus(x, y).is_some() == b.oplus(fx, fy).is_some(),
        |map| is_oa_iso(a, b, map),
    );
    Ok(found)
}

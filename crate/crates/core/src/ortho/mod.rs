//! Orthomodular posets and orthoalgebras: carriers, axiom checks,
//! conversions, intervals, and isomorphism certificates.

mod iso;
mod oa;
mod omp;

pub use iso::{
    is_oa_iso, is_omp_iso, oa_iso, oa_iso_limited, omp_iso, omp_iso_limited, DEFAULT_ISO_LIMIT,
};
pub use oa::{check_oa, interval_oa, oa_to_orthoposet, omp_to_oa, IntervalOa, OrthoAlgebra};
pub use omp::{check_omp, check_orthoposet, interval_omp, IntervalOmp, OrthoPoset};

use crate::error::Result;
use crate::order::{gen, FinPoset};

/// The Boolean algebra 2^k with set complement.
pub fn boolean_omp(k: usize) -> Result<OrthoPoset> {
    let l = gen::boolean(k)?;
    let full = l.top();
    OrthoPoset::from_lattice(&l, (0..l.len()).map(|x| x ^ full).collect())
}

/// MO_k with atoms `2i + 1` and `2i + 2` orthocomplementary.
pub fn mo_omp(k: usize) -> Result<OrthoPoset> {
    let l = gen::mo(k)?;
    let top = l.top();
    let ocomp = (0..l.len())
        .map(|x| match x {
            0 => top,
            x if x == top => 0,
            x if x % 2 == 1 => x + 1,
            x => x - 1,
        })
        .collect();
    OrthoPoset::from_lattice(&l, ocomp)
}

/// The hexagon: `0 < 1 < 2 < 5` and `0 < 3 < 4 < 5` with `1' = 4`, `2' = 3`.
/// Orthocomplemented but not orthomodular.
pub fn hexagon() -> Result<OrthoPoset> {
    let p = FinPoset::from_covers(6, &[(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)])?;
    OrthoPoset::new(p, vec![5, 4, 3, 2, 1, 0])
}

/// The Wright triangle: three 3-atom Boolean blocks pasted pairwise along
/// one atom each. Zero is 0, atoms are `1..=6`, the complement of atom `i` is
/// `i + 6`, and one is 13. It is an orthoalgebra whose induced orthoposet is
/// not orthomodular.
pub fn wright_triangle() -> OrthoAlgebra {
    const ONE: usize = 13;
    let blocks = [[1, 2, 3], [3, 4, 5], [5, 6, 1]];
    let mut triples = Vec::new();
    for x in 0..=ONE {
        triples.push((0, x, x));
        triples.push((x, 0, x));
    }
    for atom in 1..=6 {
        triples.push((atom, atom + 6, ONE));
        triples.push((atom + 6, atom, ONE));
    }
    for [x, y, z] in blocks {
        for (p, q, r) in [(x, y, z), (x, z, y), (y, z, x)] {
            triples.push((p, q, r + 6));
            triples.push((q, p, r + 6));
        }
    }
    OrthoAlgebra::from_triples(14, 0, ONE, triples).expect("consistent table")
}

#[cfg(test)]
mod tests;

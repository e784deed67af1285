use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::order::FinPoset;
use crate::ortho::OrthoPoset;

use super::eqrel::{all_partitions, permute, rel_compose, rel_meet, EqRel};

/// Default bound on the set size for factor-pair enumeration.
pub const DEFAULT_SET_LIMIT: usize = 8;

/// An ordered pair of equivalence relations with `θ1 ∩ θ2 = Δ` and
/// `θ1 ∘ θ2 = ∇`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorPair {
    pub theta1: EqRel,
    pub theta2: EqRel,
}

impl FactorPair {
    pub fn is_factor_pair(theta1: &EqRel, theta2: &EqRel) -> bool {
        theta1.len() == theta2.len()
            && rel_meet(theta1, theta2).is_ok_and(|m| m.is_identity())
            && rel_compose(theta1, theta2).is_ok_and(|c| c.is_total())
    }

    pub fn swapped(&self) -> FactorPair {
        FactorPair {
            theta1: self.theta2.clone(),
            theta2: self.theta1.clone(),
        }
    }
}

pub(crate) fn set_guard(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptySet);
    }
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "set",
            size: n,
            limit,
        });
    }
    Ok(())
}

/// Partitions with equal-sized blocks, in restricted-growth-string order.
/// Only these occur in factor pairs of a finite set.
pub(crate) fn uniform_partitions(n: usize) -> Vec<EqRel> {
    all_partitions(n)
        .into_iter()
        .filter(EqRel::is_uniform)
        .collect()
}

/// All factor pairs of `0..n`, ordered by the restricted-growth-string
/// positions of `θ1`, then `θ2`.
pub fn factor_pairs(n: usize) -> Result<Vec<FactorPair>> {
    factor_pairs_limited(n, DEFAULT_SET_LIMIT)
}

pub fn factor_pairs_limited(n: usize, limit: usize) -> Result<Vec<FactorPair>> {
    set_guard(n, limit)?;
    let parts = uniform_partitions(n);
    let mut out = Vec::new();
    for t1 in &parts {
        for t2 in &parts {
            if t1.blocks() * t2.blocks() == n && FactorPair::is_factor_pair(t1, t2) {
                out.push(FactorPair {
                    theta1: t1.clone(),
                    theta2: t2.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Fact X: factor pairs of an `n`-element set as an orthoposet.
#[derive(Clone, Debug)]
pub struct FactX {
    pub n: usize,
    pub pairs: Vec<FactorPair>,
    pub omp: OrthoPoset,
    index: HashMap<FactorPair, usize>,
}

impl FactX {
    pub fn index_of(&self, p: &FactorPair) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Builds Fact X with `(θ1, θ2) <= (φ1, φ2)` iff `θ1 ⊆ φ1`, `φ2 ⊆ θ2`, and
/// every two of `θ1, θ2, φ1, φ2` permute; `(θ1, θ2)' = (θ2, θ1)`.
pub fn build_factx(n: usize) -> Result<FactX> {
    build_factx_limited(n, DEFAULT_SET_LIMIT)
}

pub fn build_factx_limited(n: usize, limit: usize) -> Result<FactX> {
    let pairs = factor_pairs_limited(n, limit)?;
    // Intern the partitions that occur, then tabulate inclusion and permutability.
    let mut ids: HashMap<EqRel, usize> = HashMap::new();
    let mut rels: Vec<EqRel> = Vec::new();
    let mut id_of = |r: &EqRel| -> usize {
        *ids.entry(r.clone()).or_insert_with(|| {
            rels.push(r.clone());
            rels.len() - 1
        })
    };
    let coded: Vec<(usize, usize)> = pairs
        .iter()
        .map(|p| (id_of(&p.theta1), id_of(&p.theta2)))
        .collect();
    let m = rels.len();
    let mut finer = vec![false; m * m];
    let mut perm = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            finer[i * m + j] = rels[i].is_finer(&rels[j]);
            perm[i * m + j] = permute(&rels[i], &rels[j])?;
        }
    }
    let leq = |a: usize, b: usize| {
        let (t1, t2) = coded[a];
        let (p1, p2) = coded[b];
        let all = [t1, t2, p1, p2];
        finer[t1 * m + p1]
            && finer[p2 * m + t2]
            && all
                .iter()
                .all(|&x| all.iter().all(|&y| perm[x * m + y]))
    };
    let poset = FinPoset::from_fn(pairs.len(), leq)?;
    let index: HashMap<FactorPair, usize> = pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let ocomp = pairs.iter().map(|p| index[&p.swapped()]).collect();
    let omp = OrthoPoset::new(poset, ocomp)?;
    Ok(FactX {
        n,
        pairs,
        omp,
        index,
    })
}

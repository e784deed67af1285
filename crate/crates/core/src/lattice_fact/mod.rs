//! Orthomodular posets of complementary pairs of a modular (or symmetric)
//! lattice, and the section certificate for their intervals.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{FinLattice, FinPoset, SymmetryClass};
use crate::ortho::{check_omp, interval_omp, is_omp_iso, IntervalOmp, OrthoPoset};
use crate::report::Report;

/// Which hypothesis the lattice is required to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Modular,
    Symmetric,
}

/// `L⁽²⁾`: complementary pairs `(x1, x2)` ordered by `x1 <= y1` and
/// `y2 <= x2`, with `(x1, x2)' = (x2, x1)`.
#[derive(Clone, Debug)]
pub struct PairOmp {
    pub mode: Mode,
    /// Pair id -> `(x1, x2)`, sorted lexicographically.
    pub pairs: Vec<(usize, usize)>,
    pub omp: OrthoPoset,
    index: HashMap<(usize, usize), usize>,
}

impl PairOmp {
    pub fn index_of(&self, x: usize, y: usize) -> Option<usize> {
        self.index.get(&(x, y)).copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

fn check_mode(l: &FinLattice, mode: Mode) -> Result<()> {
    match mode {
        Mode::Modular => match l.modular_violation() {
            None => Ok(()),
            Some((a, b, c)) => Err(Error::PreconditionFailed {
                reason: "lattice is not modular".into(),
                witness: vec![a, b, c],
            }),
        },
        Mode::Symmetric => match l.symmetry_class() {
            SymmetryClass::Modular | SymmetryClass::Symmetric => Ok(()),
            class => {
                let n = l.len();
                let witness = (0..n * n)
                    .map(|k| (k / n, k % n))
                    .find(|&(a, b)| {
                        (l.modular_pair(a, b) && !l.modular_pair(b, a))
                            || (l.dual_modular_pair(a, b) && !l.dual_modular_pair(b, a))
                    })
                    .map_or_else(Vec::new, |(a, b)| vec![a, b]);
                Err(Error::PreconditionFailed {
                    reason: format!("lattice is not symmetric ({class:?})"),
                    witness,
                })
            }
        },
    }
}

/// Builds `L⁽²⁾`. Symmetric mode keeps only pairs where `(x, y)` and
/// `(y, x)` are both modular and dual-modular pairs.
pub fn build_l2(l: &FinLattice, mode: Mode) -> Result<PairOmp> {
    check_mode(l, mode)?;
    let n = l.len();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if !l.is_complement(x, y) {
                continue;
            }
            let admissible = match mode {
                Mode::Modular => true,
                Mode::Symmetric => {
                    l.modular_pair(x, y)
                        && l.dual_modular_pair(x, y)
                        && l.modular_pair(y, x)
                        && l.dual_modular_pair(y, x)
                }
            };
            if admissible {
                pairs.push((x, y));
            }
        }
    }
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let poset = FinPoset::from_fn(pairs.len(), |i, j| {
        let ((x1, x2), (y1, y2)) = (pairs[i], pairs[j]);
        l.leq(x1, y1) && l.leq(y2, x2)
    })?;
    let ocomp = pairs.iter().map(|&(x, y)| index[&(y, x)]).collect();
    let omp = OrthoPoset::new(poset, ocomp)?;
    Ok(PairOmp {
        mode,
        pairs,
        omp,
        index,
    })
}

/// Certificate that the interval below `(a, b)` in `L⁽²⁾` is isomorphic to
/// `(a↓)⁽²⁾` via `Γ(x, y) = (x, y ∧ a)` and `Φ(u, v) = (u, v ∨ b)`.
#[derive(Debug)]
pub struct LatticeSection {
    pub report: Report,
    /// Id of `(a, b)` in `L⁽²⁾`.
    pub p: usize,
    pub interval: IntervalOmp,
    /// `(a↓)⁽²⁾`, with lattice elements given as ids of `L`.
    pub target: PairOmp,
    /// Interval-local id -> target id.
    pub gamma: Vec<Option<usize>>,
    /// Target id -> interval-local id.
    pub phi: Vec<Option<usize>>,
}

pub fn lattice_section(l: &FinLattice, mode: Mode, a: usize, b: usize) -> Result<LatticeSection> {
    let l2 = build_l2(l, mode)?;
    lattice_section_with(l, &l2, a, b)
}

pub fn lattice_section_with(l: &FinLattice, l2: &PairOmp, a: usize, b: usize) -> Result<LatticeSection> {
    let p = l2.index_of(a, b).ok_or_else(|| Error::PreconditionFailed {
        reason: format!("({a}, {b}) is not an admissible complementary pair"),
        witness: vec![a, b],
    })?;
    let down = l.interval(l.bot(), a)?;
    let local_target = build_l2(&down.lattice, l2.mode)?;
    let target = lift(&local_target, &down.embed);
    let interval = interval_omp(&l2.omp, p)?;

    let mut r = Report::new(format!("section of L⁽²⁾ below ({a}, {b})"));
    for name in [
        "source_omp",
        "target_omp",
        "gamma_defined",
        "phi_defined",
        "mutually_inverse",
        "gamma_monotone",
        "phi_monotone",
        "gamma_ortho",
        "phi_ortho",
        "iso_agrees",
    ] {
        r.pass(name);
    }
    r.stat("interval_size", interval.omp.len() as i64);
    r.stat("target_size", target.len() as i64);
    let src = check_omp(&interval.omp);
    if !src.ok() {
        r.absorb("source", &src);
        r.fail("source_omp", &[p]);
    }
    let tgt = check_omp(&target.omp);
    if !tgt.ok() {
        r.absorb("target", &tgt);
        r.fail("target_omp", &[p]);
    }

    let gamma: Vec<Option<usize>> = interval
        .embed
        .iter()
        .map(|&i| {
            let (x, y) = l2.pairs[i];
            target.index_of(x, l.meet(y, a))
        })
        .collect();
    let phi: Vec<Option<usize>> = target
        .pairs
        .iter()
        .map(|&(u, v)| l2.index_of(u, l.join(v, b)).and_then(|g| interval.local(g)))
        .collect();
    for (i, g) in gamma.iter().enumerate() {
        if g.is_none() {
            let (x, y) = l2.pairs[interval.embed[i]];
            r.fail("gamma_defined", &[x, y]);
        }
    }
    for (j, f) in phi.iter().enumerate() {
        if f.is_none() {
            let (u, v) = target.pairs[j];
            r.fail("phi_defined", &[u, v]);
        }
    }
    if r.ok() {
        let g: Vec<usize> = gamma.iter().map(|v| v.unwrap()).collect();
        let f: Vec<usize> = phi.iter().map(|v| v.unwrap()).collect();
        for (i, &gi) in g.iter().enumerate() {
            if f[gi] != i {
                r.fail("mutually_inverse", &[i]);
            }
        }
        for (j, &fj) in f.iter().enumerate() {
            if g[fj] != j {
                r.fail("mutually_inverse", &[j]);
            }
        }
        let io = &interval.omp;
        let to = &target.omp;
        for i in 0..g.len() {
            for j in 0..g.len() {
                if io.leq(i, j) && !to.leq(g[i], g[j]) {
                    r.fail("gamma_monotone", &[i, j]);
                }
            }
            // Γ(z^#) = Γ(z)'
            if g[io.ocomp(i)] != to.ocomp(g[i]) {
                r.fail("gamma_ortho", &[i]);
            }
        }
        for j in 0..f.len() {
            for k in 0..f.len() {
                if to.leq(j, k) && !io.leq(f[j], f[k]) {
                    r.fail("phi_monotone", &[j, k]);
                }
            }
            // Φ(w') = Φ(w)^#
            if f[to.ocomp(j)] != io.ocomp(f[j]) {
                r.fail("phi_ortho", &[j]);
            }
        }
        if !is_omp_iso(io, to, &g) {
            r.fail("iso_agrees", &[p]);
        }
    }
    Ok(LatticeSection {
        report: r,
        p,
        interval,
        target,
        gamma,
        phi,
    })
}

/// Re-labels a pair OMP over an interval lattice with parent ids.
fn lift(local: &PairOmp, embed: &[usize]) -> PairOmp {
    let pairs: Vec<(usize, usize)> = local.pairs.iter().map(|&(x, y)| (embed[x], embed[y])).collect();
    let index = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    PairOmp {
        mode: local.mode,
        pairs,
        omp: local.omp.clone(),
        index,
    }
}

use std::collections::HashMap;

use super::poset::FinPoset;
use crate::error::{check_index, Error, Result};

/// Default refusal threshold for lattice constructions; every check is cubic.
pub const DEFAULT_LATTICE_LIMIT: usize = 512;

/// A finite bounded lattice on `0..n` with total meet and join tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinLattice {
    poset: FinPoset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bot: usize,
    top: usize,
}

impl FinLattice {
    /// Computes meet and join tables from the order; fails if the poset is not
    /// a bounded lattice.
    pub fn from_poset(poset: FinPoset) -> Result<Self> {
        Self::from_poset_limited(poset, DEFAULT_LATTICE_LIMIT)
    }

    pub fn from_poset_limited(poset: FinPoset, limit: usize) -> Result<Self> {
        let n = poset.len();
        if n > limit {
            return Err(Error::LimitExceeded {
                what: "lattice",
                size: n,
                limit,
            });
        }
        let bot = poset.bottom().ok_or(Error::NotBounded("bottom"))?;
        let top = poset.top().ok_or(Error::NotBounded("top"))?;
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let m = poset
                    .glb(a, b)
                    .ok_or(Error::NotALattice(a, b, "greatest lower bound"))?;
                let j = poset
                    .lub(a, b)
                    .ok_or(Error::NotALattice(a, b, "least upper bound"))?;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        Ok(Self {
            poset,
            meet,
            join,
            bot,
            top,
        })
    }

    /// Wraps tables produced by a generator. Bounds come from the order; the
    /// tables are trusted (generator tests compare them with [`Self::from_poset`]).
    pub(crate) fn from_tables(poset: FinPoset, meet: Vec<usize>, join: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if meet.len() != n * n || join.len() != n * n {
            return Err(Error::SizeMismatch(meet.len().max(join.len()), n * n));
        }
        let bot = poset.bottom().ok_or(Error::NotBounded("bottom"))?;
        let top = poset.top().ok_or(Error::NotBounded("top"))?;
        Ok(Self {
            poset,
            meet,
            join,
            bot,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_complement(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == self.bot && self.join(a, b) == self.top
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| x != self.bot && self.poset.down(x).count_ones(..) == 2)
            .collect()
    }

    /// A triple `(a, b, c)` with `c <= b` and `c ∨ (a ∧ b) != (c ∨ a) ∧ b`.
    pub fn modular_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for b in 0..n {
            for c in self.poset.down(b).ones() {
                for a in 0..n {
                    if self.join(c, self.meet(a, b)) != self.meet(self.join(c, a), b) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_modular(&self) -> bool {
        self.modular_violation().is_none()
    }

    /// Witness `c` against `(a, b)M`: `c <= b` with `c ∨ (a ∧ b) != (c ∨ a) ∧ b`.
    pub fn modular_pair_witness(&self, a: usize, b: usize) -> Option<usize> {
        let ab = self.meet(a, b);
        self.poset
            .down(b)
            .ones()
            .find(|&c| self.join(c, ab) != self.meet(self.join(c, a), b))
    }

    /// Witness `c` against `(a, b)M*`: `b <= c` with `c ∧ (a ∨ b) != (c ∧ a) ∨ b`.
    pub fn dual_modular_pair_witness(&self, a: usize, b: usize) -> Option<usize> {
        let ab = self.join(a, b);
        self.poset
            .up(b)
            .ones()
            .find(|&c| self.meet(c, ab) != self.join(self.meet(c, a), b))
    }

    pub fn modular_pair(&self, a: usize, b: usize) -> bool {
        self.modular_pair_witness(a, b).is_none()
    }

    pub fn dual_modular_pair(&self, a: usize, b: usize) -> bool {
        self.dual_modular_pair_witness(a, b).is_none()
    }

    pub fn symmetry_class(&self) -> SymmetryClass {
        if self.is_modular() {
            return SymmetryClass::Modular;
        }
        let n = self.len();
        let m: Vec<bool> = (0..n * n).map(|k| self.modular_pair(k / n, k % n)).collect();
        let ms: Vec<bool> = (0..n * n)
            .map(|k| self.dual_modular_pair(k / n, k % n))
            .collect();
        let symmetric = |t: &[bool]| (0..n).all(|a| (0..n).all(|b| !t[a * n + b] || t[b * n + a]));
        match (symmetric(&m), symmetric(&ms)) {
            (true, true) => SymmetryClass::Symmetric,
            (true, false) => SymmetryClass::MSymmetricOnly,
            (false, true) => SymmetryClass::MStarSymmetricOnly,
            (false, false) => SymmetryClass::Neither,
        }
    }

    /// The interval `[lo, hi]` as a lattice, with ids ascending in the parent.
    pub fn interval(&self, lo: usize, hi: usize) -> Result<IntervalLattice> {
        check_index(lo, self.len())?;
        check_index(hi, self.len())?;
        if !self.leq(lo, hi) {
            return Err(Error::BadInterval { lo, hi });
        }
        let mut carrier = self.poset.up(lo).clone();
        carrier.intersect_with(self.poset.down(hi));
        let embed: Vec<usize> = carrier.ones().collect();
        let index: HashMap<usize, usize> = embed.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let m = embed.len();
        let mut meet = vec![0; m * m];
        let mut join = vec![0; m * m];
        for (i, &x) in embed.iter().enumerate() {
            for (j, &y) in embed.iter().enumerate() {
                meet[i * m + j] = index[&self.meet(x, y)];
                join[i * m + j] = index[&self.join(x, y)];
            }
        }
        let lattice = FinLattice::from_tables(self.poset.restrict(&embed), meet, join)?;
        Ok(IntervalLattice {
            lattice,
            embed,
            index,
        })
    }
}

/// A lattice interval together with its embedding into the parent lattice.
#[derive(Clone, Debug)]
pub struct IntervalLattice {
    pub lattice: FinLattice,
    /// Local id -> parent id.
    pub embed: Vec<usize>,
    /// Parent id -> local id.
    pub index: HashMap<usize, usize>,
}

impl IntervalLattice {
    pub fn local(&self, parent: usize) -> Option<usize> {
        self.index.get(&parent).copied()
    }
}

/// Classification by the two pair-symmetry properties; modularity dominates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum SymmetryClass {
    Modular,
    Symmetric,
    MSymmetricOnly,
    MStarSymmetricOnly,
    Neither,
}

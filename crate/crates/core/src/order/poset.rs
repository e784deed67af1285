use fixedbitset::FixedBitSet;

use crate::error::{check_index, Error, Result};

/// A finite partial order on `0..n`, stored as up-set and down-set bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinPoset {
    n: usize,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl FinPoset {
    /// Builds a poset from a predicate `leq(i, j)`, validating the order axioms.
    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if leq(i, j) {
                    row.insert(j);
                }
            }
        }
        Self::from_up_sets(up)
    }

    /// Builds a poset from listed pairs `(i, j)` meaning `i <= j`.
    ///
    /// Reflexive pairs are added; the listing must already be transitive.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            row.insert(i);
        }
        for &(i, j) in pairs {
            check_index(i, n)?;
            check_index(j, n)?;
            up[i].insert(j);
        }
        Self::from_up_sets(up)
    }

    /// Builds a poset from a cover relation (`(i, j)`: `j` covers `i`) by
    /// reflexive-transitive closure.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            row.insert(i);
        }
        for &(i, j) in covers {
            check_index(i, n)?;
            check_index(j, n)?;
            up[i].insert(j);
        }
        // Warshall on rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        Self::from_up_sets(up)
    }

    fn from_up_sets(up: Vec<FixedBitSet>) -> Result<Self> {
        let n = up.len();
        for (i, row) in up.iter().enumerate() {
            if !row.contains(i) {
                return Err(Error::NotReflexive(i));
            }
        }
        for i in 0..n {
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(Error::NotAntisymmetric(i.min(j), i.max(j)));
                }
                if !up[j].is_subset(&up[i]) {
                    let k = up[j].difference(&up[i]).next().unwrap();
                    return Err(Error::NotTransitive(i, j, k));
                }
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        Ok(Self { n, up, down })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.up[i].contains(j)
    }

    /// `{ j : i <= j }`
    pub fn up(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    /// `{ j : j <= i }`
    pub fn down(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    pub fn lower_bounds(&self, a: usize, b: usize) -> FixedBitSet {
        let mut s = self.down[a].clone();
        s.intersect_with(&self.down[b]);
        s
    }

    pub fn upper_bounds(&self, a: usize, b: usize) -> FixedBitSet {
        let mut s = self.up[a].clone();
        s.intersect_with(&self.up[b]);
        s
    }

    /// The greatest element of `set`, if it has one.
    pub fn greatest(&self, set: &FixedBitSet) -> Option<usize> {
        // A greatest element has the strictly largest down-set inside `set`.
        let z = set.ones().max_by_key(|&z| (self.down[z].count_ones(..), usize::MAX - z))?;
        set.is_subset(&self.down[z]).then_some(z)
    }

    /// The least element of `set`, if it has one.
    pub fn least(&self, set: &FixedBitSet) -> Option<usize> {
        let z = set.ones().max_by_key(|&z| (self.up[z].count_ones(..), usize::MAX - z))?;
        set.is_subset(&self.up[z]).then_some(z)
    }

    pub fn glb(&self, a: usize, b: usize) -> Option<usize> {
        if self.leq(a, b) {
            return Some(a);
        }
        if self.leq(b, a) {
            return Some(b);
        }
        self.greatest(&self.lower_bounds(a, b))
    }

    pub fn lub(&self, a: usize, b: usize) -> Option<usize> {
        if self.leq(a, b) {
            return Some(b);
        }
        if self.leq(b, a) {
            return Some(a);
        }
        self.least(&self.upper_bounds(a, b))
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.up[i].count_ones(..) == self.n)
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.down[i].count_ones(..) == self.n)
    }

    /// Length of the longest chain from a minimal element up to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| self.down[i].count_ones(..));
        let mut h = vec![0; self.n];
        for &i in &order {
            h[i] = self.down[i]
                .ones()
                .filter(|&j| j != i)
                .map(|j| h[j] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// All pairs `(i, j)` with `i <= j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.up[i].ones().map(move |j| (i, j)))
    }

    /// The cover relation: `(i, j)` with `i < j` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.up[i].ones() {
                if j == i {
                    continue;
                }
                let mut between = self.up[i].clone();
                between.intersect_with(&self.down[j]);
                if between.count_ones(..) == 2 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The order induced on `carrier` (listed in the new id order).
    pub fn restrict(&self, carrier: &[usize]) -> FinPoset {
        let m = carrier.len();
        let mut up = vec![FixedBitSet::with_capacity(m); m];
        let mut down = vec![FixedBitSet::with_capacity(m); m];
        for (a, &x) in carrier.iter().enumerate() {
            for (b, &y) in carrier.iter().enumerate() {
                if self.leq(x, y) {
                    up[a].insert(b);
                    down[b].insert(a);
                }
            }
        }
        FinPoset { n: m, up, down }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_close_transitively() {
        let p = FinPoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.heights(), vec![0, 1, 2]);
    }

    #[test]
    fn cycle_is_rejected() {
        let err = FinPoset::from_covers(2, &[(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, Error::NotAntisymmetric(0, 1));
    }

    #[test]
    fn non_transitive_listing_names_the_triple() {
        let err = FinPoset::from_pairs(3, &[(0, 1), (1, 2)]).unwrap_err();
        assert_eq!(err, Error::NotTransitive(0, 1, 2));
    }

    #[test]
    fn antichain_has_no_bounds() {
        let p = FinPoset::from_pairs(2, &[]).unwrap();
        assert_eq!(p.bottom(), None);
        assert_eq!(p.lub(0, 1), None);
        assert_eq!(p.glb(0, 0), Some(0));
    }
}

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// An equivalence relation on `0..n`, stored as a canonical block labelling:
/// block ids are numbered in order of first occurrence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EqRel {
    block_of: Vec<usize>,
    blocks: usize,
}

impl EqRel {
    /// Canonicalizes an arbitrary labelling: `x ~ y` iff `labels[x] == labels[y]`.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut seen: Vec<&T> = Vec::new();
        let block_of = labels
            .iter()
            .map(|l| match seen.iter().position(|s| *s == l) {
                Some(i) => i,
                None => {
                    seen.push(l);
                    seen.len() - 1
                }
            })
            .collect();
        Self {
            block_of,
            blocks: seen.len(),
        }
    }

    /// Canonicalizes labels drawn from `0..bound`, in linear time.
    pub fn from_small_labels(labels: &[usize], bound: usize) -> Self {
        let mut rename = vec![usize::MAX; bound];
        let mut blocks = 0;
        let block_of = labels
            .iter()
            .map(|&l| {
                if rename[l] == usize::MAX {
                    rename[l] = blocks;
                    blocks += 1;
                }
                rename[l]
            })
            .collect();
        Self { block_of, blocks }
    }

    /// The identity relation Δ.
    pub fn identity(n: usize) -> Self {
        Self {
            block_of: (0..n).collect(),
            blocks: n,
        }
    }

    /// The total relation ∇.
    pub fn full(n: usize) -> Self {
        Self {
            block_of: vec![0; n],
            blocks: usize::from(n > 0),
        }
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    #[inline]
    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    #[inline]
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn is_identity(&self) -> bool {
        self.blocks == self.len()
    }

    pub fn is_full(&self) -> bool {
        self.blocks <= 1
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.blocks];
        for &b in &self.block_of {
            sizes[b] += 1;
        }
        sizes
    }

    /// Members of each block, ascending.
    pub fn block_members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// All blocks have the same size.
    pub fn is_uniform(&self) -> bool {
        let s = self.block_sizes();
        s.windows(2).all(|w| w[0] == w[1])
    }

    /// `self ⊆ other` as sets of pairs.
    pub fn is_finer(&self, other: &EqRel) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut image = vec![usize::MAX; self.blocks];
        self.block_of.iter().zip(&other.block_of).all(|(&b, &c)| {
            if image[b] == usize::MAX {
                image[b] = c;
            }
            image[b] == c
        })
    }

    /// `x ~ y` iff `self` relates `f(x)` and `f(y)`.
    pub fn pullback(&self, f: &[usize]) -> EqRel {
        let labels: Vec<usize> = f.iter().map(|&y| self.block_of[y]).collect();
        EqRel::from_small_labels(&labels, self.blocks)
    }

    pub fn to_relation(&self) -> Relation {
        let n = self.len();
        let members = self.block_members();
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in rows.iter_mut().enumerate() {
            for &y in &members[self.block_of[x]] {
                row.insert(y);
            }
        }
        Relation { n, rows }
    }
}

impl fmt::Debug for EqRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .block_members()
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{{{}}}", parts.join("|"))
    }
}

/// A binary relation on `0..n` as bit rows: `rows[x]` holds every `y` with `x R y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    rows: Vec<FixedBitSet>,
}

impl Relation {
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn is_total(&self) -> bool {
        self.rows.iter().all(|r| r.count_ones(..) == self.n)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

fn same_size(r: &EqRel, s: &EqRel) -> Result<()> {
    if r.len() == s.len() {
        Ok(())
    } else {
        Err(Error::SizeMismatch(r.len(), s.len()))
    }
}

/// `r ∩ s`, the common refinement.
pub fn rel_meet(r: &EqRel, s: &EqRel) -> Result<EqRel> {
    same_size(r, s)?;
    let labels: Vec<usize> = (0..r.len())
        .map(|x| r.block_of(x) * s.blocks() + s.block_of(x))
        .collect();
    Ok(EqRel::from_small_labels(&labels, r.blocks() * s.blocks()))
}

/// `r ∘ s = {(x, z) : x r y and y s z for some y}`.
pub fn rel_compose(r: &EqRel, s: &EqRel) -> Result<Relation> {
    same_size(r, s)?;
    let n = r.len();
    let r_members = r.block_members();
    let s_rel = s.to_relation();
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    // Rows only depend on the r-block of x.
    let mut by_block = vec![FixedBitSet::with_capacity(n); r.blocks()];
    for (b, members) in r_members.iter().enumerate() {
        for &y in members {
            by_block[b].union_with(&s_rel.rows[y]);
        }
    }
    for (x, row) in rows.iter_mut().enumerate() {
        row.union_with(&by_block[r.block_of(x)]);
    }
    Ok(Relation { n, rows })
}

/// `r ∘ s = s ∘ r`.
pub fn permute(r: &EqRel, s: &EqRel) -> Result<bool> {
    Ok(rel_compose(r, s)? == rel_compose(s, r)?)
}

/// All partitions of `0..n`, in lexicographic order of their restricted
/// growth strings: ∇ (`00..0`) comes first and Δ (`01..n-1`) last.
pub fn all_partitions(n: usize) -> Vec<EqRel> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(EqRel::identity(0));
        return out;
    }
    let mut a = vec![0usize; n];
    loop {
        let blocks = a.iter().max().unwrap() + 1;
        out.push(EqRel {
            block_of: a.clone(),
            blocks,
        });
        // Increment the rightmost position that can grow.
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            let bound = a[..i].iter().max().unwrap() + 1;
            if a[i] < bound {
                a[i] += 1;
                for v in a.iter_mut().skip(i + 1) {
                    *v = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::ortho::{oa_to_orthoposet, OrthoAlgebra};
use crate::setfact::{rel_meet, set_guard, uniform_partitions, EqRel, DEFAULT_SET_LIMIT};

use super::map::FinMap;

/// A binary decomposition `[f1, f2]` of `0..n`, represented by the kernels of
/// its two quotient maps. Kernel equality decides `≃`, so each class has
/// exactly one value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    pub k1: EqRel,
    pub k2: EqRel,
}

impl Decomposition {
    pub fn new(k1: EqRel, k2: EqRel) -> Result<Self> {
        if !is_product(&[&k1, &k2]) {
            return Err(Error::Invalid(format!(
                "{k1:?} and {k2:?} do not form a product diagram"
            )));
        }
        Ok(Self { k1, k2 })
    }

    /// `[τ, 1]`
    pub fn zero(n: usize) -> Self {
        Self {
            k1: EqRel::full(n),
            k2: EqRel::identity(n),
        }
    }

    /// `[1, τ]`
    pub fn one(n: usize) -> Self {
        Self {
            k1: EqRel::identity(n),
            k2: EqRel::full(n),
        }
    }

    pub fn f1(&self) -> FinMap {
        FinMap::quotient(&self.k1)
    }

    pub fn f2(&self) -> FinMap {
        FinMap::quotient(&self.k2)
    }

    pub fn len(&self) -> usize {
        self.k1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k1.is_empty()
    }
}

/// True iff `x ↦ (block_1(x), ..., block_m(x))` is a bijection onto the
/// product of the block sets.
pub fn is_product(kernels: &[&EqRel]) -> bool {
    let Some(first) = kernels.first() else {
        return false;
    };
    let n = first.len();
    if kernels.iter().any(|k| k.len() != n) {
        return false;
    }
    let size = kernels.iter().try_fold(1usize, |acc, k| acc.checked_mul(k.blocks()));
    if size != Some(n) {
        return false;
    }
    let mut hit = vec![false; n];
    (0..n).all(|x| {
        let code = kernels.iter().fold(0, |acc, k| acc * k.blocks() + k.block_of(x));
        !std::mem::replace(&mut hit[code], true)
    })
}

/// 𝒟(A) for `A = 0..n`: all binary decompositions with the partial operation
/// induced by ternary decompositions.
#[derive(Debug)]
pub struct DecompositionOa {
    pub n: usize,
    pub elems: Vec<Decomposition>,
    pub oa: OrthoAlgebra,
    /// Ternary decompositions `[c1, c2, c3]` as ids into `parts`.
    pub ternaries: Vec<[usize; 3]>,
    /// Uniform partitions of `0..n`, in restricted-growth-string order.
    pub parts: Vec<EqRel>,
    /// `(d, e, v1, v2)`: two ternary witnesses giving different values for `d ⊕ e`.
    pub conflicts: Vec<(usize, usize, usize, usize)>,
    index: HashMap<Decomposition, usize>,
    induced_omp: OnceLock<bool>,
}

impl DecompositionOa {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn index_of(&self, d: &Decomposition) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn zero(&self) -> usize {
        self.oa.zero()
    }

    pub fn one(&self) -> usize {
        self.oa.one()
    }

    /// `d ⊕ e`, or `None` when no ternary decomposition realizes it.
    pub fn oplus(&self, d: usize, e: usize) -> Option<usize> {
        self.oa.oplus(d, e)
    }

    /// Whether the orthoposet induced by `⊕` is orthomodular.
    pub fn induced_is_omp(&self) -> bool {
        *self
            .induced_omp
            .get_or_init(|| oa_to_orthoposet(&self.oa).map(|(_, omp)| omp).unwrap_or(false))
    }

    pub fn ternary(&self, t: usize) -> [&EqRel; 3] {
        self.ternaries[t].map(|i| &self.parts[i])
    }
}

/// Enumerates 𝒟(A) for an `n`-element set, `1 <= n <= 8`.
pub fn enumerate_d(n: usize) -> Result<DecompositionOa> {
    enumerate_d_limited(n, DEFAULT_SET_LIMIT)
}

pub fn enumerate_d_limited(n: usize, limit: usize) -> Result<DecompositionOa> {
    set_guard(n, limit)?;
    let parts = uniform_partitions(n);

    let mut elems = Vec::new();
    for k1 in &parts {
        for k2 in &parts {
            if is_product(&[k1, k2]) {
                elems.push(Decomposition {
                    k1: k1.clone(),
                    k2: k2.clone(),
                });
            }
        }
    }
    let index: HashMap<Decomposition, usize> = elems.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();

    let mut ternaries = Vec::new();
    for (i1, c1) in parts.iter().enumerate() {
        for (i2, c2) in parts.iter().enumerate() {
            let b12 = c1.blocks() * c2.blocks();
            if !n.is_multiple_of(b12) || rel_meet(c1, c2)?.blocks() != b12 {
                continue;
            }
            for (i3, c3) in parts.iter().enumerate() {
                if c3.blocks() * b12 == n && is_product(&[c1, c2, c3]) {
                    ternaries.push([i1, i2, i3]);
                }
            }
        }
    }

    let lookup = |k1: EqRel, k2: EqRel| -> Result<usize> {
        index
            .get(&Decomposition { k1, k2 })
            .copied()
            .ok_or_else(|| Error::Invalid("ternary projection is not a binary decomposition".into()))
    };
    let mut sums: HashMap<(usize, usize), usize> = HashMap::new();
    let mut conflicts = Vec::new();
    for &[i1, i2, i3] in &ternaries {
        let (c1, c2, c3) = (&parts[i1], &parts[i2], &parts[i3]);
        // [c1, (c2, c3)] ⊕ [c2, (c1, c3)] = [(c1, c2), c3]
        let d = lookup(c1.clone(), rel_meet(c2, c3)?)?;
        let e = lookup(c2.clone(), rel_meet(c1, c3)?)?;
        let v = lookup(rel_meet(c1, c2)?, c3.clone())?;
        match sums.get(&(d, e)) {
            Some(&old) if old != v => conflicts.push((d, e, old, v)),
            Some(_) => {}
            None => {
                sums.insert((d, e), v);
            }
        }
    }
    let zero = index[&Decomposition::zero(n)];
    let one = index[&Decomposition::one(n)];
    let oa = OrthoAlgebra::from_triples(
        elems.len(),
        zero,
        one,
        sums.into_iter().map(|((d, e), v)| (d, e, v)),
    )?;
    Ok(DecompositionOa {
        n,
        elems,
        oa,
        ternaries,
        parts,
        conflicts,
        index,
        induced_omp: OnceLock::new(),
    })
}

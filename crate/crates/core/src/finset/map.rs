use crate::error::{Error, Result};
use crate::setfact::EqRel;

/// A function between finite sets `0..dom -> 0..cod`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinMap {
    cod: usize,
    image: Vec<usize>,
}

impl FinMap {
    pub fn new(cod: usize, image: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = image.iter().find(|&&y| y >= cod) {
            return Err(Error::OutOfRange(bad, cod));
        }
        Ok(Self { cod, image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cod: n,
            image: (0..n).collect(),
        }
    }

    /// τ: the unique map to the one-element set.
    pub fn terminal(n: usize) -> Self {
        Self {
            cod: 1,
            image: vec![0; n],
        }
    }

    /// The quotient map onto the blocks of `r`.
    pub fn quotient(r: &EqRel) -> Self {
        Self {
            cod: r.blocks(),
            image: r.labels().to_vec(),
        }
    }

    /// `(f, g)` into the product of the codomains, coded as `f(x) * |C| + g(x)`.
    pub fn pair(f: &FinMap, g: &FinMap) -> Result<Self> {
        if f.dom() != g.dom() {
            return Err(Error::SizeMismatch(f.dom(), g.dom()));
        }
        Ok(Self {
            cod: f.cod * g.cod,
            image: f.image.iter().zip(&g.image).map(|(&a, &b)| a * g.cod + b).collect(),
        })
    }

    /// The second projection `B × C -> C` under the coding of [`FinMap::pair`].
    pub fn second_projection(b: usize, c: usize) -> Self {
        Self {
            cod: c,
            image: (0..b * c).map(|i| i % c).collect(),
        }
    }

    pub fn dom(&self) -> usize {
        self.image.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FinMap) -> Result<FinMap> {
        if first.cod != self.dom() {
            return Err(Error::SizeMismatch(first.cod, self.dom()));
        }
        Ok(FinMap {
            cod: self.cod,
            image: first.image.iter().map(|&y| self.image[y]).collect(),
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod];
        for &y in &self.image {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom() == self.cod && self.is_surjective()
    }

    pub fn kernel(&self) -> EqRel {
        EqRel::from_small_labels(&self.image, self.cod)
    }
}

/// A disjoint-set forest over `0..n`.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// The pushout object of a span and its two legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushout {
    pub size: usize,
    pub left: FinMap,
    pub right: FinMap,
}

/// The pushout of `f: A -> B` and `g: A -> C`: the disjoint union of `B` and
/// `C` modulo the equivalence generated by `f(a) ~ g(a)`.
pub fn pushout(f: &FinMap, g: &FinMap) -> Result<Pushout> {
    if f.dom() != g.dom() {
        return Err(Error::SizeMismatch(f.dom(), g.dom()));
    }
    if f.dom() == 0 || f.cod() == 0 || g.cod() == 0 {
        return Err(Error::EmptySet);
    }
    let (b, c) = (f.cod(), g.cod());
    let mut uf = UnionFind::new(b + c);
    for a in 0..f.dom() {
        uf.union(f.apply(a), b + g.apply(a));
    }
    let roots: Vec<usize> = (0..b + c).map(|x| uf.find(x)).collect();
    let classes = EqRel::from_small_labels(&roots, b + c);
    let labels = classes.labels();
    Ok(Pushout {
        size: classes.blocks(),
        left: FinMap::new(classes.blocks(), labels[..b].to_vec())?,
        right: FinMap::new(classes.blocks(), labels[b..].to_vec())?,
    })
}

/// A commuting-square candidate `p ∘ f = q ∘ g` over the span `(f, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushoutSquare {
    pub f: FinMap,
    pub g: FinMap,
    pub p: FinMap,
    pub q: FinMap,
}

impl PushoutSquare {
    pub fn commutes(&self) -> bool {
        match (self.p.after(&self.f), self.q.after(&self.g)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

/// True iff the square commutes and the comparison map from the computed
/// pushout to its corner is a bijection.
pub fn is_pushout(sq: &PushoutSquare) -> Result<bool> {
    if sq.p.cod() != sq.q.cod() || sq.p.cod() == 0 {
        return Err(if sq.p.cod() == 0 { Error::EmptySet } else { Error::SizeMismatch(sq.p.cod(), sq.q.cod()) });
    }
    if !sq.commutes() {
        return Ok(false);
    }
    let po = pushout(&sq.f, &sq.g)?;
    let mut comparison = vec![usize::MAX; po.size];
    for b in 0..sq.p.dom() {
        comparison[po.left.apply(b)] = sq.p.apply(b);
    }
    for c in 0..sq.q.dom() {
        let k = po.right.apply(c);
        if comparison[k] != usize::MAX && comparison[k] != sq.q.apply(c) {
            return Ok(false);
        }
        comparison[k] = sq.q.apply(c);
    }
    let u = FinMap::new(sq.p.cod(), comparison)?;
    Ok(u.is_bijective())
}

use crate::error::{check_index, Error, Result};
use crate::order::FinPoset;
use crate::report::Report;

use super::omp::{check_omp, OrthoPoset};

const UNDEF: u32 = u32::MAX;

/// A finite partial binary operation `⊕` with constants, meant to be an
/// orthoalgebra. The table is stored as given; commutativity is a checked
/// axiom, not an assumption.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoAlgebra {
    n: usize,
    zero: usize,
    one: usize,
    table: Vec<u32>,
    /// `partners[a]`: every `b` with `a ⊕ b` defined, ascending.
    partners: Vec<Vec<u32>>,
}

impl OrthoAlgebra {
    /// Builds from defined triples `a ⊕ b = c`. Listing a pair twice with
    /// different values is an error.
    pub fn from_triples(
        n: usize,
        zero: usize,
        one: usize,
        triples: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        check_index(zero, n)?;
        check_index(one, n)?;
        if n > u32::MAX as usize - 1 {
            return Err(Error::LimitExceeded {
                what: "orthoalgebra",
                size: n,
                limit: u32::MAX as usize - 1,
            });
        }
        let mut table = vec![UNDEF; n * n];
        for (a, b, c) in triples {
            check_index(a, n)?;
            check_index(b, n)?;
            check_index(c, n)?;
            let slot = &mut table[a * n + b];
            if *slot != UNDEF && *slot as usize != c {
                return Err(Error::Invalid(format!(
                    "{a} ⊕ {b} listed as both {} and {c}",
                    *slot
                )));
            }
            *slot = c as u32;
        }
        let partners = (0..n)
            .map(|a| {
                (0..n as u32)
                    .filter(|&b| table[a * n + b as usize] != UNDEF)
                    .collect()
            })
            .collect();
        Ok(Self {
            n,
            zero,
            one,
            table,
            partners,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn oplus(&self, a: usize, b: usize) -> Option<usize> {
        match self.table[a * self.n + b] {
            UNDEF => None,
            c => Some(c as usize),
        }
    }

    /// Every `b` with `a ⊕ b` defined.
    pub fn partners(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.partners[a].iter().map(|&b| b as usize)
    }

    /// All defined triples `(a, b, a ⊕ b)`.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| {
            self.partners(a)
                .map(move |b| (a, b, self.oplus(a, b).unwrap()))
        })
    }

    pub fn defined_count(&self) -> usize {
        self.partners.iter().map(Vec::len).sum()
    }

    /// The elements `c` with `a ⊕ c = one`.
    pub fn complements(&self, a: usize) -> Vec<usize> {
        self.partners(a)
            .filter(|&c| self.oplus(a, c) == Some(self.one))
            .collect()
    }

    /// The unique complement, if there is exactly one.
    pub fn complement(&self, a: usize) -> Option<usize> {
        match self.complements(a).as_slice() {
            [c] => Some(*c),
            _ => None,
        }
    }

    /// `a <= b` iff some `c` has `a ⊕ c = b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.partners(a).any(|c| self.oplus(a, c) == Some(b))
    }
}

/// Commutativity, associativity, unique complements, `a ⊕ a` only for zero,
/// and cancellativity, with witnesses.
pub fn check_oa(a: &OrthoAlgebra) -> Report {
    let mut r = Report::new("orthoalgebra");
    let n = a.len();
    r.stat("carrier", n as i64);
    r.stat("defined_pairs", a.defined_count() as i64);
    for name in [
        "commutative",
        "associative",
        "unique_complement",
        "self_sum_zero",
        "cancellative",
    ] {
        r.pass(name);
    }
    for (x, y, v) in a.triples() {
        if a.oplus(y, x) != Some(v) {
            r.fail("commutative", &[x, y]);
        }
    }
    // (x ⊕ y) ⊕ z defined => x ⊕ (y ⊕ z) defined and equal.
    for (x, y, xy) in a.triples() {
        for z in a.partners(xy) {
            let lhs = a.oplus(xy, z).unwrap();
            match a.oplus(y, z).and_then(|yz| a.oplus(x, yz)) {
                Some(rhs) if rhs == lhs => {}
                _ => r.fail("associative", &[x, y, z]),
            }
        }
    }
    // x ⊕ (y ⊕ z) defined => (x ⊕ y) ⊕ z defined and equal.
    for (y, z, yz) in a.triples() {
        for x in a.partners(yz) {
            let rhs = a.oplus(x, yz).unwrap();
            match a.oplus(x, y).and_then(|xy| a.oplus(xy, z)) {
                Some(lhs) if lhs == rhs => {}
                _ => r.fail("associative", &[x, y, z]),
            }
        }
    }
    for x in 0..n {
        let c = a.complements(x);
        if c.len() != 1 {
            let mut w = vec![x];
            w.extend(c);
            r.fail("unique_complement", &w);
        }
        if a.oplus(x, x).is_some() && x != a.zero() {
            r.fail("self_sum_zero", &[x]);
        }
        let mut seen: Vec<(usize, usize)> = a.partners(x).map(|y| (a.oplus(x, y).unwrap(), y)).collect();
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0].0 == w[1].0 {
                r.fail("cancellative", &[x, w[0].1, w[1].1]);
            }
        }
    }
    r
}

/// Orthogonal joins of an orthomodular poset as a partial operation.
pub fn omp_to_oa(p: &OrthoPoset) -> Result<OrthoAlgebra> {
    let report = check_omp(p);
    if !report.ok() {
        return Err(Error::NotAnOmp(failed_names(&report)));
    }
    let mut triples = Vec::new();
    for a in 0..p.len() {
        for b in p.poset().down(p.ocomp(a)).ones() {
            let j = p.join(a, b).expect("orthogonal join checked");
            triples.push((a, b, j));
        }
    }
    OrthoAlgebra::from_triples(p.len(), p.bot(), p.top(), triples)
}

/// The induced orthocomplemented poset of an orthoalgebra, and whether it is
/// orthomodular (every defined `a ⊕ b` is a least upper bound).
pub fn oa_to_orthoposet(a: &OrthoAlgebra) -> Result<(OrthoPoset, bool)> {
    let report = check_oa(a);
    if !report.ok() {
        return Err(Error::NotAnOa(failed_names(&report)));
    }
    let pairs: Vec<(usize, usize)> = a.triples().map(|(x, _, v)| (x, v)).collect();
    let poset = FinPoset::from_pairs(a.len(), &pairs)
        .map_err(|e| Error::NotAnOa(e.to_string()))?;
    let ocomp = (0..a.len())
        .map(|x| a.complement(x).expect("complements checked"))
        .collect();
    let is_omp = a
        .triples()
        .all(|(x, y, v)| poset.upper_bounds(x, y).is_subset(poset.up(v)));
    let omp = OrthoPoset::new(poset, ocomp).map_err(|e| Error::NotAnOa(e.to_string()))?;
    Ok((omp, is_omp))
}

/// An interval `a↓` of an orthoalgebra with its embedding.
#[derive(Clone, Debug)]
pub struct IntervalOa {
    pub oa: OrthoAlgebra,
    /// Local id -> parent id, ascending.
    pub embed: Vec<usize>,
    /// Defined sums of interval elements whose value left the interval.
    /// Zero when the orthoalgebra comes from an orthomodular poset; the
    /// Wright triangle has some.
    pub escaped: usize,
}

impl IntervalOa {
    pub fn local(&self, parent: usize) -> Option<usize> {
        self.embed.binary_search(&parent).ok()
    }
}

/// The interval `{b : b ⊕ c = a for some c}` with constants `zero` and `a`,
/// and `⊕` restricted to pairs whose sum stays in the interval.
pub fn interval_oa(a: &OrthoAlgebra, top: usize) -> Result<IntervalOa> {
    check_index(top, a.len())?;
    let embed: Vec<usize> = (0..a.len()).filter(|&b| a.leq(b, top)).collect();
    let local = |x: usize| embed.binary_search(&x).ok();
    let mut escaped = 0;
    let mut triples = Vec::new();
    for (i, &x) in embed.iter().enumerate() {
        for y in a.partners(x) {
            let Some(j) = local(y) else { continue };
            let v = a.oplus(x, y).unwrap();
            match local(v) {
                Some(k) => triples.push((i, j, k)),
                None => escaped += 1,
            }
        }
    }
    let zero = local(a.zero()).ok_or_else(|| Error::NotAnOa("zero is not below the interval top".into()))?;
    let one = local(top).ok_or_else(|| Error::NotAnOa(format!("{top} is not below itself")))?;
    let oa = OrthoAlgebra::from_triples(embed.len(), zero, one, triples)?;
    Ok(IntervalOa { oa, embed, escaped })
}

fn failed_names(r: &Report) -> String {
    r.failed()
        .map(|v| v.name.as_str())
        .collect::<Vec<_>>()
        .join(", ")
}

use crate::error::{check_index, Error, Result};
use crate::order::{FinLattice, FinPoset};
use crate::report::Report;

/// A bounded poset with a unary operation meant to be an orthocomplementation.
///
/// Construction only checks structural well-formedness; the axioms are
/// examined by [`check_orthoposet`] and [`check_omp`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoPoset {
    poset: FinPoset,
    ocomp: Vec<usize>,
    bot: usize,
    top: usize,
}

impl OrthoPoset {
    pub fn new(poset: FinPoset, ocomp: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if ocomp.len() != n {
            return Err(Error::SizeMismatch(ocomp.len(), n));
        }
        for &x in &ocomp {
            check_index(x, n)?;
        }
        let bot = poset.bottom().ok_or(Error::NotBounded("bottom"))?;
        let top = poset.top().ok_or(Error::NotBounded("top"))?;
        Ok(Self {
            poset,
            ocomp,
            bot,
            top,
        })
    }

    pub fn from_lattice(l: &FinLattice, ocomp: Vec<usize>) -> Result<Self> {
        Self::new(l.poset().clone(), ocomp)
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
    pub fn ocomp(&self, a: usize) -> usize {
        self.ocomp[a]
    }

    pub fn ocomp_table(&self) -> &[usize] {
        &self.ocomp
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn orthogonal(&self, a: usize, b: usize) -> bool {
        self.leq(a, self.ocomp[b])
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.poset.glb(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.poset.lub(a, b)
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| x != self.bot && self.poset.down(x).count_ones(..) == 2)
            .collect()
    }
}

/// Period two, order inversion, and the bound condition, with witnesses.
pub fn check_orthoposet(p: &OrthoPoset) -> Report {
    let mut r = Report::new("orthocomplemented poset");
    orthoposet_into(p, &mut r);
    r
}

fn orthoposet_into(p: &OrthoPoset, r: &mut Report) {
    let n = p.len();
    r.stat("carrier", n as i64);
    r.pass("period_two");
    r.pass("order_inverting");
    r.pass("complement_bounds");
    for x in 0..n {
        let y = p.ocomp(x);
        if p.ocomp(y) != x {
            r.fail("period_two", &[x, y, p.ocomp(y)]);
        }
    }
    for (x, y) in p.poset.pairs() {
        if !p.leq(p.ocomp(y), p.ocomp(x)) {
            r.fail("order_inverting", &[x, y]);
        }
    }
    for x in 0..n {
        let xc = p.ocomp(x);
        let lower = p.poset.lower_bounds(x, xc);
        if let Some(z) = lower.ones().find(|&z| z != p.bot) {
            r.fail("complement_bounds", &[x, z]);
        }
        let upper = p.poset.upper_bounds(x, xc);
        if let Some(z) = upper.ones().find(|&z| z != p.top) {
            r.fail("complement_bounds", &[x, z]);
        }
    }
}

/// Orthocomplemented-poset axioms plus the two orthomodular clauses:
/// orthogonal pairs have joins, and `x <= y` implies `x ⊕ (x ⊕ y')' = y`.
pub fn check_omp(p: &OrthoPoset) -> Report {
    let mut r = Report::new("orthomodular poset");
    orthoposet_into(p, &mut r);
    r.pass("orthogonal_joins");
    r.pass("orthomodular_law");
    let n = p.len();
    for x in 0..n {
        for y in p.poset.down(p.ocomp(x)).ones() {
            if p.join(x, y).is_none() {
                r.fail("orthogonal_joins", &[x, y]);
            }
        }
    }
    for (x, y) in p.poset.pairs() {
        let yc = p.ocomp(y);
        let Some(s) = p.join(x, yc) else {
            continue; // already reported as a missing orthogonal join
        };
        let t = p.ocomp(s);
        match p.join(x, t) {
            Some(v) if v == y => {}
            Some(v) => r.fail("orthomodular_law", &[x, y, v]),
            None => r.fail("orthogonal_joins", &[x, t]),
        }
    }
    r
}

/// An interval `a↓` with its embedding into the parent structure.
#[derive(Clone, Debug)]
pub struct IntervalOmp {
    pub omp: OrthoPoset,
    /// Local id -> parent id.
    pub embed: Vec<usize>,
}

impl IntervalOmp {
    pub fn local(&self, parent: usize) -> Option<usize> {
        self.embed.binary_search(&parent).ok()
    }
}

/// The interval `a↓` with the induced order and `b# = a ∧ b'`.
pub fn interval_omp(p: &OrthoPoset, a: usize) -> Result<IntervalOmp> {
    check_index(a, p.len())?;
    let embed: Vec<usize> = p.poset.down(a).ones().collect();
    let mut ocomp = Vec::with_capacity(embed.len());
    for &b in &embed {
        let bc = p.ocomp(b);
        let m = p.meet(a, bc).ok_or(Error::MissingMeet(a, bc))?;
        let local = embed.binary_search(&m).map_err(|_| Error::MissingMeet(a, bc))?;
        ocomp.push(local);
    }
    let omp = OrthoPoset::new(p.poset.restrict(&embed), ocomp)?;
    Ok(IntervalOmp { omp, embed })
}

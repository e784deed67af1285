use crate::error::{check_index, Error, Result};
use crate::field::PrimeField;
use crate::report::Report;

/// Largest carrier accepted by the ring generators.
pub const RING_LIMIT: usize = 4096;

/// A finite ring with unit, given by addition and multiplication tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinRing {
    n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
}

impl FinRing {
    /// Builds a ring from its tables and checks every ring axiom.
    pub fn new(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, zero: usize, one: usize) -> Result<Self> {
        let n = add.len();
        if n == 0 {
            return Err(Error::EmptySet);
        }
        if n > RING_LIMIT {
            return Err(Error::LimitExceeded {
                what: "ring",
                size: n,
                limit: RING_LIMIT,
            });
        }
        if mul.len() != n {
            return Err(Error::SizeMismatch(mul.len(), n));
        }
        for row in add.iter().chain(&mul) {
            if row.len() != n {
                return Err(Error::SizeMismatch(row.len(), n));
            }
            for &v in row {
                check_index(v, n)?;
            }
        }
        check_index(zero, n)?;
        check_index(one, n)?;
        let add: Vec<usize> = add.concat();
        let mul: Vec<usize> = mul.concat();
        let neg = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| add[a * n + b] == zero)
                    .ok_or_else(|| Error::InvalidRing(format!("{a} has no additive inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        let r = Self::from_parts(n, add, mul, zero, one, neg);
        let report = check_ring(&r);
        if let Some(v) = report.failed().next() {
            let w = report
                .witnesses_for(&v.name)
                .next()
                .map(|w| format!(" at {:?}", w.tuple))
                .unwrap_or_default();
            return Err(Error::InvalidRing(format!("{} fails{w}", v.name)));
        }
        Ok(r)
    }

    fn from_parts(n: usize, add: Vec<usize>, mul: Vec<usize>, zero: usize, one: usize, neg: Vec<usize>) -> Self {
        Self {
            n,
            add,
            mul,
            neg,
            zero,
            one,
        }
    }

    /// Builds a ring from operation closures without re-checking the axioms.
    pub(crate) fn tabulate(
        n: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
    ) -> Self {
        let mut at = Vec::with_capacity(n * n);
        let mut mt = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                at.push(add(a, b));
                mt.push(mul(a, b));
            }
        }
        let neg = (0..n)
            .map(|a| (0..n).find(|&b| at[a * n + b] == zero).unwrap_or(zero))
            .collect();
        Self::from_parts(n, at, mt, zero, one, neg)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(<[usize]>::to_vec).collect()
    }
}

/// Checks the ring-with-unit axioms. Witness tuples are element ids.
pub fn check_ring(r: &FinRing) -> Report {
    let mut rep = Report::new(format!("ring with {} elements", r.len()));
    for name in [
        "add_commutative",
        "add_associative",
        "add_identity",
        "add_inverse",
        "mul_associative",
        "distributive",
        "unit",
    ] {
        rep.pass(name);
    }
    rep.stat("carrier", r.len() as i64);
    let n = r.len();
    for a in 0..n {
        if r.add(a, r.zero) != a {
            rep.fail("add_identity", &[a]);
        }
        if r.add(a, r.neg(a)) != r.zero {
            rep.fail("add_inverse", &[a]);
        }
        if r.mul(a, r.one) != a || r.mul(r.one, a) != a {
            rep.fail("unit", &[a]);
        }
        for b in 0..n {
            if r.add(a, b) != r.add(b, a) {
                rep.fail("add_commutative", &[a, b]);
            }
            let (ab_add, ab_mul) = (r.add(a, b), r.mul(a, b));
            for c in 0..n {
                if r.add(ab_add, c) != r.add(a, r.add(b, c)) {
                    rep.fail("add_associative", &[a, b, c]);
                }
                if r.mul(ab_mul, c) != r.mul(a, r.mul(b, c)) {
                    rep.fail("mul_associative", &[a, b, c]);
                }
                if r.mul(a, r.add(b, c)) != r.add(ab_mul, r.mul(a, c))
                    || r.mul(ab_add, c) != r.add(r.mul(a, c), r.mul(b, c))
                {
                    rep.fail("distributive", &[a, b, c]);
                }
            }
        }
    }
    rep
}

fn ring_guard(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptySet);
    }
    if n > RING_LIMIT {
        return Err(Error::LimitExceeded {
            what: "ring",
            size: n,
            limit: RING_LIMIT,
        });
    }
    Ok(())
}

/// The integers modulo `m`, elements `0..m`.
pub fn zn(m: usize) -> Result<FinRing> {
    ring_guard(m)?;
    Ok(FinRing::tabulate(m, |a, b| (a + b) % m, |a, b| a * b % m, 0, 1 % m))
}

/// `Z_{m1} × ... × Z_{mk}` with mixed-radix ids, first coordinate most
/// significant.
pub fn product_zn(moduli: &[usize]) -> Result<FinRing> {
    if moduli.is_empty() || moduli.contains(&0) {
        return Err(Error::Invalid("moduli must be non-empty and positive".into()));
    }
    let n = moduli
        .iter()
        .try_fold(1usize, |acc, &m| acc.checked_mul(m).filter(|&v| v <= RING_LIMIT))
        .ok_or(Error::LimitExceeded {
            what: "ring",
            size: usize::MAX,
            limit: RING_LIMIT,
        })?;
    let split = |mut x: usize| {
        let mut c = vec![0; moduli.len()];
        for (i, &m) in moduli.iter().enumerate().rev() {
            c[i] = x % m;
            x /= m;
        }
        c
    };
    let join = |c: &[usize]| c.iter().zip(moduli).fold(0, |acc, (&v, &m)| acc * m + v);
    let op = |a: usize, b: usize, f: &dyn Fn(usize, usize, usize) -> usize| {
        let (ca, cb) = (split(a), split(b));
        let c: Vec<usize> = (0..moduli.len()).map(|i| f(ca[i], cb[i], moduli[i])).collect();
        join(&c)
    };
    let one = join(&moduli.iter().map(|&m| 1 % m).collect::<Vec<_>>());
    Ok(FinRing::tabulate(
        n,
        |a, b| op(a, b, &|x, y, m| (x + y) % m),
        |a, b| op(a, b, &|x, y, m| x * y % m),
        0,
        one,
    ))
}

/// `k × k` matrices over GF(p). A matrix is identified with the base-p
/// number whose digits are its entries in row-major order, entry (0,0)
/// least significant.
pub fn mat(k: usize, p: usize) -> Result<FinRing> {
    let f = PrimeField::new(p)?;
    let cells = k * k;
    let n = (0..cells)
        .try_fold(1usize, |acc, _| acc.checked_mul(p).filter(|&v| v <= RING_LIMIT))
        .ok_or(Error::LimitExceeded {
            what: "ring",
            size: usize::MAX,
            limit: RING_LIMIT,
        })?;
    if k == 0 {
        return Err(Error::EmptySet);
    }
    let entries: Vec<Vec<usize>> = (0..n).map(|v| f.digits(v, cells)).collect();
    let add = |a: usize, b: usize| {
        let d: Vec<usize> = (0..cells).map(|i| f.add(entries[a][i], entries[b][i])).collect();
        f.undigits(&d)
    };
    let mul = |a: usize, b: usize| {
        let mut d = vec![0; cells];
        for i in 0..k {
            for j in 0..k {
                let mut s = 0;
                for l in 0..k {
                    s = f.add(s, f.mul(entries[a][i * k + l], entries[b][l * k + j]));
                }
                d[i * k + j] = s;
            }
        }
        f.undigits(&d)
    };
    let one = f.undigits(&(0..cells).map(|i| usize::from(i / k == i % k)).collect::<Vec<_>>());
    Ok(FinRing::tabulate(n, add, mul, 0, one))
}

/// The id of the `k × k` matrix with the given row-major entries over GF(p).
pub fn mat_id(p: usize, entries: &[usize]) -> usize {
    entries.iter().rev().fold(0, |acc, &d| acc * p + d)
}

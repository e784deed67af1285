use crate::error::{Error, Result};

/// The prime field GF(p) for p <= 7, with arithmetic by table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl PrimeField {
    pub fn new(p: usize) -> Result<Self> {
        if ![2, 3, 5, 7].contains(&p) {
            return Err(Error::Invalid(format!(
                "field order {p} unsupported (expected a prime <= 7)"
            )));
        }
        let add = (0..p * p).map(|k| (k / p + k % p) % p).collect();
        let mul = (0..p * p).map(|k| (k / p) * (k % p) % p).collect();
        Ok(Self { p, add, mul })
    }

    pub fn order(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.p + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.p + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        (self.p - a) % self.p
    }

    /// Digits of `v` in base p, least significant first, padded to `len`.
    pub fn digits(&self, mut v: usize, len: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    pub fn undigits(&self, digits: &[usize]) -> usize {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }
}

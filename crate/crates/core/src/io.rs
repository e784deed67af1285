//! JSON file formats for lattices, orthoposets, orthoalgebras and rings.
//!
//! ```json
//! { "n": 5, "covers": [[0,1],[0,2],[0,3],[1,4],[2,4],[3,4]] }
//! { "n": 2, "leq": [[0,1]], "ocomp": [1,0] }
//! { "n": 2, "zero": 0, "one": 1, "oplus": [[0,0,0],[0,1,1],[1,0,1]] }
//! { "n": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "zero": 0, "one": 1 }
//! ```

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{FinLattice, FinPoset};
use crate::ortho::{OrthoAlgebra, OrthoPoset};
use crate::ring::FinRing;

/// An order given by its cover pairs or by its full `<=` listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ocomp: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OaFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub zero: usize,
    pub one: usize,
    pub oplus: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

/// Parses JSON, reporting syntax and shape errors with line and column.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let msg = full.strip_suffix(&suffix).unwrap_or(&full);
        Error::Format(format!("line {}, column {}: {msg}", e.line(), e.column()))
    })
}

fn field_err(field: &str, msg: impl std::fmt::Display) -> Error {
    Error::Format(format!("{field}: {msg}"))
}

fn check_pairs(field: &str, pairs: &[[usize; 2]], n: usize) -> Result<Vec<(usize, usize)>> {
    pairs
        .iter()
        .enumerate()
        .map(|(i, &[a, b])| {
            if a >= n || b >= n {
                Err(field_err(&format!("{field}[{i}]"), format!("element out of range for n = {n}")))
            } else {
                Ok((a, b))
            }
        })
        .collect()
}

impl OrderFile {
    pub fn poset(&self) -> Result<FinPoset> {
        let n = self.n;
        match (&self.covers, &self.leq) {
            (Some(c), None) => FinPoset::from_covers(n, &check_pairs("covers", c, n)?),
            (None, Some(l)) => FinPoset::from_pairs(n, &check_pairs("leq", l, n)?),
            _ => Err(field_err("covers/leq", "exactly one of the two must be given")),
        }
    }

    pub fn lattice(&self) -> Result<FinLattice> {
        FinLattice::from_poset(self.poset()?)
    }

    pub fn orthoposet(&self) -> Result<OrthoPoset> {
        let ocomp = self.ocomp.clone().ok_or_else(|| field_err("ocomp", "missing"))?;
        if ocomp.len() != self.n {
            return Err(field_err("ocomp", format!("has {} entries, expected {}", ocomp.len(), self.n)));
        }
        if let Some(i) = ocomp.iter().position(|&x| x >= self.n) {
            return Err(field_err(&format!("ocomp[{i}]"), format!("element out of range for n = {}", self.n)));
        }
        OrthoPoset::new(self.poset()?, ocomp)
    }

    /// Cover listing of a lattice.
    pub fn from_lattice(l: &FinLattice, name: Option<String>) -> Self {
        Self::from_poset(l.poset(), name)
    }

    pub fn from_poset(p: &FinPoset, name: Option<String>) -> Self {
        Self {
            name,
            n: p.len(),
            covers: Some(p.covers().into_iter().map(|(a, b)| [a, b]).collect()),
            leq: None,
            ocomp: None,
        }
    }

    pub fn from_orthoposet(p: &OrthoPoset, name: Option<String>) -> Self {
        Self {
            ocomp: Some(p.ocomp_table().to_vec()),
            ..Self::from_poset(p.poset(), name)
        }
    }
}

impl OaFile {
    pub fn oa(&self) -> Result<OrthoAlgebra> {
        for (i, t) in self.oplus.iter().enumerate() {
            if t.iter().any(|&x| x >= self.n) {
                return Err(field_err(&format!("oplus[{i}]"), format!("element out of range for n = {}", self.n)));
            }
        }
        for (f, v) in [("zero", self.zero), ("one", self.one)] {
            if v >= self.n {
                return Err(field_err(f, format!("element out of range for n = {}", self.n)));
            }
        }
        OrthoAlgebra::from_triples(self.n, self.zero, self.one, self.oplus.iter().map(|&[a, b, c]| (a, b, c)))
            .map_err(|e| field_err("oplus", e))
    }

    pub fn from_oa(a: &OrthoAlgebra, name: Option<String>) -> Self {
        Self {
            name,
            n: a.len(),
            zero: a.zero(),
            one: a.one(),
            oplus: a.triples().map(|(x, y, z)| [x, y, z]).collect(),
        }
    }
}

impl RingFile {
    pub fn ring(&self) -> Result<FinRing> {
        for (f, t) in [("add", &self.add), ("mul", &self.mul)] {
            if t.len() != self.n {
                return Err(field_err(f, format!("has {} rows, expected {}", t.len(), self.n)));
            }
            if let Some(i) = t.iter().position(|row| row.len() != self.n) {
                return Err(field_err(&format!("{f}[{i}]"), format!("has {} entries, expected {}", t[i].len(), self.n)));
            }
        }
        FinRing::new(self.add.clone(), self.mul.clone(), self.zero, self.one)
    }

    pub fn from_ring(r: &FinRing, name: Option<String>) -> Self {
        Self {
            name,
            n: r.len(),
            add: r.add_table(),
            mul: r.mul_table(),
            zero: r.zero(),
            one: r.one(),
        }
    }
}

pub fn read_lattice(text: &str) -> Result<FinLattice> {
    parse_json::<OrderFile>(text)?.lattice()
}

pub fn read_orthoposet(text: &str) -> Result<OrthoPoset> {
    parse_json::<OrderFile>(text)?.orthoposet()
}

pub fn read_oa(text: &str) -> Result<OrthoAlgebra> {
    parse_json::<OaFile>(text)?.oa()
}

pub fn read_ring(text: &str) -> Result<FinRing> {
    parse_json::<RingFile>(text)?.ring()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

//! Corpus configuration, materialization to concrete instances, and the
//! aggregate run.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::{parse_json, to_json, OaFile, OrderFile, RingFile};
use crate::lattice_fact::Mode;
use crate::order::gen;
use crate::report::Report;
use crate::ring::{mat, product_zn, zn};
use crate::suite::{cat_suite, lattice_suite, oa_suite, omp_suite, ring_suite, set_suite, CatOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "gen", rename_all = "lowercase")]
pub enum LatticeGen {
    Boolean { k: usize },
    Chain { k: usize },
    Mo { k: usize },
    M3,
    N5,
    Subspace { q: usize, d: usize },
    File { path: String },
}

fn modular() -> Mode {
    Mode::Modular
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeEntry {
    #[serde(flatten)]
    pub source: LatticeGen,
    #[serde(default = "modular")]
    pub mode: Mode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "gen", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingGen {
    Zn { n: usize },
    /// `Z_m` for every `m` in `from..=to`.
    ZnRange { from: usize, to: usize },
    Product { moduli: Vec<usize> },
    /// Every product of `2..=max_factors` cyclic rings of order at least 2
    /// (moduli non-decreasing) with total size at most `max_size`.
    Products { max_factors: usize, max_size: usize },
    Mat { k: usize, p: usize },
    File { path: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetEntry {
    pub n: usize,
    #[serde(default)]
    pub bridge: bool,
    #[serde(default)]
    pub sections: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatEntry {
    pub n: usize,
    #[serde(default = "yes")]
    pub honesty: bool,
    #[serde(default = "yes")]
    pub claims: bool,
    #[serde(default = "yes")]
    pub sections: bool,
}

/// A corpus configuration file.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusConfig {
    #[serde(default)]
    pub lattices: Vec<LatticeEntry>,
    #[serde(default)]
    pub rings: Vec<RingGen>,
    #[serde(default)]
    pub sets: Vec<SetEntry>,
    #[serde(default)]
    pub cats: Vec<CatEntry>,
    /// Orthoposet files.
    #[serde(default)]
    pub omps: Vec<String>,
    /// Orthoalgebra files.
    #[serde(default)]
    pub oas: Vec<String>,
}

impl CorpusConfig {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }
}

/// One concrete instance, fully tabulated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Instance {
    Lattice { mode: Mode, data: OrderFile },
    Ring { data: RingFile },
    Set(SetEntry),
    Cat(CatEntry),
    Omp { data: OrderFile },
    Oa { data: OaFile },
}

impl Instance {
    pub fn name(&self) -> String {
        match self {
            Instance::Lattice { data, .. } | Instance::Omp { data } => data.name.clone().unwrap_or_default(),
            Instance::Ring { data } => data.name.clone().unwrap_or_default(),
            Instance::Oa { data } => data.name.clone().unwrap_or_default(),
            Instance::Set(s) => format!("set{}", s.n),
            Instance::Cat(c) => format!("cat{}", c.n),
        }
    }
}

/// A materialized corpus: every generator expanded into tables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub instances: Vec<Instance>,
}

impl Corpus {
    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

fn read_file(base: &Path, path: &str) -> Result<String> {
    let p = base.join(path);
    std::fs::read_to_string(&p).map_err(|e| Error::Format(format!("{}: {e}", p.display())))
}

fn in_file(path: &str, e: Error) -> Error {
    Error::Format(format!("{path}: {e}"))
}

fn products(max_factors: usize, max_size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, left: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, max_size: usize) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for m in start..=max_size / size {
            cur.push(m);
            go(m, left - 1, size * m, cur, out, max_size);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(2, max_factors, 1, &mut Vec::new(), &mut out, max_size);
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Expands generators and loads files (resolved against `base`).
pub fn materialize(cfg: &CorpusConfig, base: &Path) -> Result<Corpus> {
    let mut out = Vec::new();
    for e in &cfg.lattices {
        let (name, l) = match &e.source {
            LatticeGen::Boolean { k } => (format!("2^{k}"), gen::boolean(*k)?),
            LatticeGen::Chain { k } => (format!("chain{k}"), gen::chain(*k)?),
            LatticeGen::Mo { k } => (format!("MO{k}"), gen::mo(*k)?),
            LatticeGen::M3 => ("M3".into(), gen::m3()?),
            LatticeGen::N5 => ("N5".into(), gen::n5()?),
            LatticeGen::Subspace { q, d } => (format!("Sub(GF({q})^{d})"), gen::subspace_lattice(*q, *d)?),
            LatticeGen::File { path } => {
                let f: OrderFile = parse_json(&read_file(base, path)?).map_err(|e| in_file(path, e))?;
                f.lattice().map_err(|e| in_file(path, e))?;
                out.push(Instance::Lattice {
                    mode: e.mode,
                    data: OrderFile {
                        name: f.name.clone().or_else(|| Some(path.clone())),
                        ..f
                    },
                });
                continue;
            }
        };
        out.push(Instance::Lattice {
            mode: e.mode,
            data: OrderFile::from_lattice(&l, Some(name)),
        });
    }
    for g in &cfg.rings {
        let mut push = |name: String, r: crate::ring::FinRing| {
            out.push(Instance::Ring {
                data: RingFile::from_ring(&r, Some(name)),
            })
        };
        match g {
            RingGen::Zn { n } => push(format!("Z{n}"), zn(*n)?),
            RingGen::ZnRange { from, to } => {
                for n in *from..=*to {
                    push(format!("Z{n}"), zn(n)?);
                }
            }
            RingGen::Product { moduli } => push(product_name(moduli), product_zn(moduli)?),
            RingGen::Products { max_factors, max_size } => {
                for ms in products(*max_factors, *max_size) {
                    push(product_name(&ms), product_zn(&ms)?);
                }
            }
            RingGen::Mat { k, p } => push(format!("M{k}(GF({p}))"), mat(*k, *p)?),
            RingGen::File { path } => {
                let f: RingFile = parse_json(&read_file(base, path)?).map_err(|e| in_file(path, e))?;
                let r = f.ring().map_err(|e| in_file(path, e))?;
                push(f.name.unwrap_or_else(|| path.clone()), r);
            }
        }
    }
    out.extend(cfg.sets.iter().cloned().map(Instance::Set));
    out.extend(cfg.cats.iter().cloned().map(Instance::Cat));
    for path in &cfg.omps {
        let f: OrderFile = parse_json(&read_file(base, path)?).map_err(|e| in_file(path, e))?;
        f.orthoposet().map_err(|e| in_file(path, e))?;
        out.push(Instance::Omp {
            data: OrderFile {
                name: f.name.clone().or_else(|| Some(path.clone())),
                ..f
            },
        });
    }
    for path in &cfg.oas {
        let f: OaFile = parse_json(&read_file(base, path)?).map_err(|e| in_file(path, e))?;
        f.oa().map_err(|e| in_file(path, e))?;
        out.push(Instance::Oa {
            data: OaFile {
                name: f.name.clone().or_else(|| Some(path.clone())),
                ..f
            },
        });
    }
    Ok(Corpus { instances: out })
}

fn product_name(moduli: &[usize]) -> String {
    moduli.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x")
}

/// The suite for one instance.
pub fn run_instance(inst: &Instance) -> Result<Report> {
    Ok(match inst {
        Instance::Lattice { mode, data } => lattice_suite(&data.lattice()?, *mode),
        Instance::Ring { data } => ring_suite(&data.ring()?),
        Instance::Set(s) => set_suite(s.n, s.bridge, s.sections),
        Instance::Cat(c) => cat_suite(
            c.n,
            CatOptions {
                honesty: c.honesty,
                claims: c.claims,
                sections: c.sections,
            },
        ),
        Instance::Omp { data } => omp_suite(&data.orthoposet()?),
        Instance::Oa { data } => oa_suite(&data.oa()?),
    })
}

/// Runs every instance and folds the results. Each instance contributes a
/// top-level verdict `<kind>:<name>` and its own verdicts under that prefix.
pub fn corpus_run(corpus: &Corpus) -> Result<Report> {
    let mut r = Report::new(format!("corpus of {} instances", corpus.instances.len()));
    r.stat("instances", corpus.instances.len() as i64);
    for (i, inst) in corpus.instances.iter().enumerate() {
        let kind = match inst {
            Instance::Lattice { .. } => "lattice",
            Instance::Ring { .. } => "ring",
            Instance::Set(_) => "set",
            Instance::Cat(_) => "cat",
            Instance::Omp { .. } => "omp",
            Instance::Oa { .. } => "oa",
        };
        let key = format!("{kind}:{}", inst.name());
        let sub = run_instance(inst)?;
        r.bump(&format!("instances.{kind}"), 1);
        r.check(&key, sub.ok(), &[i]);
        for v in sub.failed() {
            for w in sub.witnesses_for(&v.name) {
                r.witnesses.push(crate::report::Witness {
                    name: format!("{key}.{}", v.name),
                    tuple: w.tuple.clone(),
                });
            }
            r.verdicts.push(crate::report::Verdict {
                name: format!("{key}.{}", v.name),
                ok: false,
            });
        }
    }
    Ok(r)
}

use std::fmt;

use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "fact-report/1";

/// Witnesses kept per verdict; further violations only bump the count stat.
const WITNESS_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub tuple: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stat {
    pub name: String,
    pub value: i64,
}

/// Outcome of a check: named verdicts, witness tuples for every failed
/// verdict, and integer statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub subject: String,
    pub verdicts: Vec<Verdict>,
    pub witnesses: Vec<Witness>,
    pub stats: Vec<Stat>,
    pub seed: Option<u64>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Self {
            schema: REPORT_SCHEMA.to_string(),
            subject: subject.into(),
            verdicts: Vec::new(),
            witnesses: Vec::new(),
            stats: Vec::new(),
            seed: None,
        }
    }

    fn slot(&mut self, name: &str) -> &mut Verdict {
        match self.verdicts.iter().position(|v| v.name == name) {
            Some(i) => &mut self.verdicts[i],
            None => {
                self.verdicts.push(Verdict {
                    name: name.to_string(),
                    ok: true,
                });
                self.verdicts.last_mut().unwrap()
            }
        }
    }

    /// Registers a verdict that stays green unless a failure is recorded.
    pub fn pass(&mut self, name: &str) {
        self.slot(name);
    }

    /// Marks `name` red and records the violating tuple.
    pub fn fail(&mut self, name: &str, tuple: &[usize]) {
        self.slot(name).ok = false;
        let kept = self.witnesses.iter().filter(|w| w.name == name).count();
        if kept < WITNESS_CAP {
            self.witnesses.push(Witness {
                name: name.to_string(),
                tuple: tuple.iter().map(|&x| x as u64).collect(),
            });
        }
        self.bump(&format!("violations.{name}"), 1);
    }

    /// `pass` when `ok`, otherwise `fail` with `tuple`.
    pub fn check(&mut self, name: &str, ok: bool, tuple: &[usize]) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, tuple);
        }
    }

    pub fn stat(&mut self, name: &str, value: i64) {
        match self.stats.iter_mut().find(|s| s.name == name) {
            Some(s) => s.value = value,
            None => self.stats.push(Stat {
                name: name.to_string(),
                value,
            }),
        }
    }

    pub fn bump(&mut self, name: &str, by: i64) {
        match self.stats.iter_mut().find(|s| s.name == name) {
            Some(s) => s.value += by,
            None => self.stats.push(Stat {
                name: name.to_string(),
                value: by,
            }),
        }
    }

    pub fn get_stat(&self, name: &str) -> Option<i64> {
        self.stats.iter().find(|s| s.name == name).map(|s| s.value)
    }

    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.verdicts.iter().find(|v| v.name == name).map(|v| v.ok)
    }

    /// True iff every verdict is green.
    pub fn ok(&self) -> bool {
        self.verdicts.iter().all(|v| v.ok)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.ok)
    }

    pub fn witnesses_for<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Witness> + 'a {
        self.witnesses.iter().filter(move |w| w.name == name)
    }

    /// Folds `other` into `self` with every name prefixed by `prefix.`;
    /// verdicts of the same name are conjoined and stats summed.
    pub fn absorb(&mut self, prefix: &str, other: &Report) {
        let key = |n: &str| {
            if prefix.is_empty() {
                n.to_string()
            } else {
                format!("{prefix}.{n}")
            }
        };
        for v in &other.verdicts {
            let k = key(&v.name);
            let slot = self.slot(&k);
            slot.ok &= v.ok;
        }
        for w in &other.witnesses {
            let k = key(&w.name);
            if self.witnesses.iter().filter(|x| x.name == k).count() < WITNESS_CAP {
                self.witnesses.push(Witness {
                    name: k,
                    tuple: w.tuple.clone(),
                });
            }
        }
        for s in &other.stats {
            self.bump(&key(&s.name), s.value);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        if let Some(seed) = self.seed {
            writeln!(f, "  seed: {seed}")?;
        }
        for s in &self.stats {
            if !s.name.starts_with("violations.") {
                writeln!(f, "  {:<40} {}", s.name, s.value)?;
            }
        }
        for v in &self.verdicts {
            writeln!(f, "  [{}] {}", if v.ok { "ok" } else { "FAIL" }, v.name)?;
            for w in self.witnesses_for(&v.name) {
                writeln!(f, "         witness {:?}", w.tuple)?;
            }
        }
        write!(f, "  => {}", if self.ok() { "PASS" } else { "FAIL" })
    }
}

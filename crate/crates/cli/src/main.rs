use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fact_core::corpus::{corpus_run, materialize, CorpusConfig};
use fact_core::finset::{cat_section_for, enumerate_d, claims_check, honesty_spot_check, Sampling};
use fact_core::io::{read_lattice, read_oa, read_orthoposet, read_ring};
use fact_core::lattice_fact::{build_l2, lattice_section, Mode};
use fact_core::ortho::{check_oa, check_omp, interval_oa, interval_omp};
use fact_core::ring::{build_er, mat, ring_section, zn, FinRing};
use fact_core::setfact::{build_factx, factx_section, factx_vs_decompositions};
use fact_core::suite::{oa_suite, omp_suite};
use fact_core::{Error, Report};

#[derive(Parser)]
#[command(name = "fact", version, about = "Orthomodular structures of decompositions and their sections")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Modular,
    Symmetric,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Modular => Mode::Modular,
            ModeArg::Symmetric => Mode::Symmetric,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// L(2) of a lattice file; `--section a b` certifies the interval below (a, b).
    Lattice {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "modular")]
        mode: ModeArg,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        section: Option<Vec<usize>>,
        #[arg(long)]
        list: bool,
    },
    /// E(R) of `zn <n>`, `mat <k> <p>`, or a ring file.
    Ring {
        #[arg(num_args = 1..=3, required = true)]
        spec: Vec<String>,
        #[arg(long)]
        section: Option<usize>,
        #[arg(long)]
        list: bool,
    },
    /// Fact X of an n-element set.
    Set {
        n: usize,
        #[arg(long)]
        bridge: bool,
        #[arg(long)]
        section: Option<usize>,
        #[arg(long)]
        list: bool,
    },
    /// Decompositions of an n-element set.
    Cat {
        n: usize,
        #[arg(long)]
        honesty: bool,
        #[arg(long)]
        claims: bool,
        #[arg(long)]
        section: Option<usize>,
        #[arg(long)]
        list: bool,
        /// Sample honesty diagrams from this seed instead of enumerating.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 256)]
        samples: usize,
    },
    /// Check an orthoposet file.
    Omp {
        file: PathBuf,
        #[arg(long)]
        section: Option<usize>,
    },
    /// Check an orthoalgebra file.
    Oa {
        file: PathBuf,
        #[arg(long)]
        section: Option<usize>,
    },
    /// Run every invariant over a corpus configuration.
    Corpus {
        config: PathBuf,
        /// Print the materialized corpus instead of running it.
        #[arg(long)]
        list: bool,
    },
}

/// Usage or input problems; reported with exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Usage> {
    std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: fact_core::Result<T>) -> Result<T, Usage> {
    r.map_err(|e| Usage(format!("{}: {e}", path.display())))
}

/// A red `precondition` verdict for hypothesis failures; other errors are usage errors.
fn precondition_or_usage(report: &mut Report, e: Error) -> Result<(), Usage> {
    match e {
        Error::PreconditionFailed { reason, witness } => {
            report.fail("precondition", &witness);
            report.subject.push_str(&format!(" [{reason}]"));
            Ok(())
        }
        other => Err(other.into()),
    }
}

fn lattice_cmd(file: &Path, mode: Mode, section: Option<Vec<usize>>, list: bool) -> Result<Report, Usage> {
    let l = in_file(file, read_lattice(&read(file)?))?;
    let mut r = Report::new(format!("L(2) of {} ({mode:?} mode)", file.display()));
    r.stat("lattice_size", l.len() as i64);
    let l2 = match build_l2(&l, mode) {
        Ok(x) => x,
        Err(e) => {
            precondition_or_usage(&mut r, e)?;
            return Ok(r);
        }
    };
    r.stat("l2_size", l2.len() as i64);
    r.stat("atoms", l2.omp.atoms().len() as i64);
    r.absorb("l2", &check_omp(&l2.omp));
    if list {
        for (i, (x, y)) in l2.pairs.iter().enumerate() {
            println!("{i}: ({x}, {y})");
        }
    }
    if let Some(s) = section {
        let c = lattice_section(&l, mode, s[0], s[1])?;
        r.absorb("section", &c.report);
    }
    Ok(r)
}

fn ring_of(spec: &[String]) -> Result<(String, FinRing), Usage> {
    let num = |s: &str| s.parse::<usize>().map_err(|_| Usage(format!("expected a number, got `{s}`")));
    match spec {
        [g, n] if g == "zn" => Ok((format!("Z{n}"), zn(num(n)?)?)),
        [g, k, p] if g == "mat" => Ok((format!("M{k}(GF({p}))"), mat(num(k)?, num(p)?)?)),
        [file] => {
            let path = Path::new(file);
            Ok((file.clone(), in_file(path, read_ring(&read(path)?))?))
        }
        _ => Err(Usage("ring expects `zn <n>`, `mat <k> <p>`, or a file".into())),
    }
}

fn ring_cmd(spec: &[String], section: Option<usize>, list: bool) -> Result<Report, Usage> {
    let (name, ring) = ring_of(spec)?;
    let er = build_er(&ring)?;
    let mut r = Report::new(format!("E(R) of {name}"));
    r.stat("ring_size", ring.len() as i64);
    r.stat("idempotents", er.len() as i64);
    r.absorb("er", &check_omp(&er.omp));
    if list {
        for (i, e) in er.elems.iter().enumerate() {
            println!("{i}: {e}  ' = {}", er.elems[er.omp.ocomp(i)]);
        }
    }
    if let Some(e) = section {
        r.absorb("section", &ring_section(&ring, e)?.report);
    }
    Ok(r)
}

fn set_cmd(n: usize, bridge: bool, section: Option<usize>, list: bool) -> Result<Report, Usage> {
    let fx = build_factx(n)?;
    let mut r = Report::new(format!("Fact X of a {n}-element set"));
    r.stat("factx_size", fx.len() as i64);
    r.stat("atoms", fx.omp.atoms().len() as i64);
    r.absorb("factx", &check_omp(&fx.omp));
    if list {
        for (i, p) in fx.pairs.iter().enumerate() {
            println!("{i}: ({:?}, {:?})", p.theta1, p.theta2);
        }
    }
    if bridge {
        r.absorb("bridge", &factx_vs_decompositions(n)?.report);
    }
    if let Some(i) = section {
        r.absorb("section", &factx_section(n, i)?.report);
    }
    Ok(r)
}

#[allow(clippy::too_many_arguments)]
fn cat_cmd(
    n: usize,
    honesty: bool,
    claims: bool,
    section: Option<usize>,
    list: bool,
    seed: Option<u64>,
    samples: usize,
) -> Result<Report, Usage> {
    let limit = fact_core::setfact::DEFAULT_SET_LIMIT;
    if honesty && seed.is_none() && n > limit {
        return Err(Usage(format!(
            "exhaustive honesty is limited to {limit} points (got {n}); pass --seed to sample"
        )));
    }
    let mut r = Report::new(format!("decompositions of a {n}-element set"));
    let sampled_only = seed.is_some() && !claims && section.is_none() && !list;
    if !sampled_only || n <= limit {
        let d = enumerate_d(n)?;
        r.stat("decompositions", d.len() as i64);
        r.stat("induced_omp", i64::from(d.induced_is_omp()));
        r.absorb("d", &check_oa(&d.oa));
        if list {
            for (i, e) in d.elems.iter().enumerate() {
                println!("{i}: [{:?}, {:?}]", e.k1, e.k2);
            }
        }
    }
    if honesty {
        let sampling = match seed {
            Some(seed) => Sampling::Seeded { seed, samples },
            None => Sampling::Exhaustive,
        };
        let h = honesty_spot_check(n, sampling)?;
        r.seed = h.seed;
        r.absorb("honesty", &h);
    }
    if claims {
        r.absorb("claims", &claims_check(n)?);
    }
    if let Some(h) = section {
        let c = cat_section_for(n, h)?;
        r.stat("target_induced_omp", i64::from(c.target_is_omp));
        r.absorb("section", &c.report);
    }
    Ok(r)
}

fn omp_cmd(file: &Path, section: Option<usize>) -> Result<Report, Usage> {
    let p = in_file(file, read_orthoposet(&read(file)?))?;
    let mut r = omp_suite(&p);
    r.subject = format!("{} ({})", file.display(), r.subject);
    if let Some(a) = section {
        let iv = interval_omp(&p, a)?;
        r.stat("interval_size", iv.omp.len() as i64);
        r.absorb("interval", &check_omp(&iv.omp));
    }
    Ok(r)
}

fn oa_cmd(file: &Path, section: Option<usize>) -> Result<Report, Usage> {
    let a = in_file(file, read_oa(&read(file)?))?;
    let mut r = oa_suite(&a);
    r.subject = format!("{} ({})", file.display(), r.subject);
    if let Some(top) = section {
        let iv = interval_oa(&a, top)?;
        r.stat("interval_size", iv.oa.len() as i64);
        r.absorb("interval", &check_oa(&iv.oa));
    }
    Ok(r)
}

fn corpus_cmd(config: &Path, list: bool) -> Result<Option<Report>, Usage> {
    let cfg = in_file(config, CorpusConfig::parse(&read(config)?))?;
    let base = config.parent().unwrap_or(Path::new("."));
    let corpus = materialize(&cfg, base)?;
    if list {
        print!("{}", corpus.to_json());
        return Ok(None);
    }
    Ok(Some(corpus_run(&corpus)?))
}

fn run(cli: Cli) -> Result<Option<Report>, Usage> {
    Ok(Some(match cli.cmd {
        Cmd::Lattice { file, mode, section, list } => lattice_cmd(&file, mode.into(), section, list)?,
        Cmd::Ring { spec, section, list } => ring_cmd(&spec, section, list)?,
        Cmd::Set { n, bridge, section, list } => set_cmd(n, bridge, section, list)?,
        Cmd::Cat {
            n,
            honesty,
            claims,
            section,
            list,
            seed,
            samples,
        } => cat_cmd(n, honesty, claims, section, list, seed, samples)?,
        Cmd::Omp { file, section } => omp_cmd(&file, section)?,
        Cmd::Oa { file, section } => oa_cmd(&file, section)?,
        Cmd::Corpus { config, list } => return corpus_cmd(&config, list),
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let report = match run(cli) {
        Ok(Some(r)) => r,
        Ok(None) => return ExitCode::SUCCESS,
        Err(Usage(msg)) => {
            eprintln!("fact: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut stdout = std::io::stdout().lock();
    if writeln!(stdout, "{report}").is_err() {
        return ExitCode::from(2);
    }
    if let Some(path) = out {
        if let Err(e) = std::fs::write(&path, report.to_json() + "\n") {
            eprintln!("fact: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::setfact::{EqRel, DEFAULT_SET_LIMIT};

use super::decomp::{enumerate_d, is_product, DecompositionOa};
use super::map::{is_pushout, FinMap, PushoutSquare};

/// Upper bound on the set size for sampled honesty checks.
pub const SAMPLED_SET_LIMIT: usize = 4096;

/// How product diagrams are drawn for the honesty check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    /// Every binary and ternary decomposition (set sizes up to 8).
    Exhaustive,
    /// `samples` random ternary and binary diagrams from a seeded generator.
    Seeded { seed: u64, samples: usize },
}

/// True iff `(f1, f2, τ, τ)` is a pushout, i.e. the binary product is disjoint.
pub fn is_disjoint_product(k1: &EqRel, k2: &EqRel) -> Result<bool> {
    let n = k1.len();
    let sq = PushoutSquare {
        f: FinMap::quotient(k1),
        g: FinMap::quotient(k2),
        p: FinMap::terminal(k1.blocks()),
        q: FinMap::terminal(k2.blocks()),
    };
    if n == 0 {
        return Err(Error::EmptySet);
    }
    is_pushout(&sq)
}

/// The square `((f1, f3), (f2, f3), π2, π2)` of a ternary product diagram.
pub fn ternary_square(c: [&EqRel; 3]) -> Result<PushoutSquare> {
    let [f1, f2, f3] = c.map(FinMap::quotient);
    Ok(PushoutSquare {
        f: FinMap::pair(&f1, &f3)?,
        g: FinMap::pair(&f2, &f3)?,
        p: FinMap::second_projection(f1.cod(), f3.cod()),
        q: FinMap::second_projection(f2.cod(), f3.cod()),
    })
}

fn check_ternary(id: usize, c: [&EqRel; 3], r: &mut Report) -> Result<()> {
    let sq = ternary_square(c)?;
    let [b1, b2, b3] = c.map(|k| k.blocks());
    let witness = [id, b1, b2, b3];
    if !is_pushout(&sq)? {
        r.fail("ternary_pushout", &witness);
    }
    let epic = c.iter().all(|k| FinMap::quotient(k).is_surjective())
        && sq.p.is_surjective()
        && sq.q.is_surjective();
    if !epic {
        r.fail("projections_epic", &witness);
    }
    r.bump("ternaries_checked", 1);
    Ok(())
}

fn check_binary(id: usize, k1: &EqRel, k2: &EqRel, r: &mut Report) -> Result<()> {
    if !is_disjoint_product(k1, k2)? {
        r.fail("binary_disjoint", &[id, k1.blocks(), k2.blocks()]);
    }
    if !(FinMap::quotient(k1).is_surjective() && FinMap::quotient(k2).is_surjective()) {
        r.fail("projections_epic", &[id, k1.blocks(), k2.blocks()]);
    }
    r.bump("binaries_checked", 1);
    Ok(())
}

/// Ordered factorizations `n = a * b * c` (factors may be 1).
fn ordered_factorizations(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=n {
        if !n.is_multiple_of(a) {
            continue;
        }
        for b in 1..=n / a {
            if (n / a).is_multiple_of(b) {
                out.push([a, b, n / a / b]);
            }
        }
    }
    out
}

/// A random product diagram with the given factor sizes: a random bijection
/// `A -> A1 × ... × Am`, read off coordinatewise.
fn random_diagram(n: usize, sizes: &[usize], rng: &mut ChaCha8Rng) -> Vec<EqRel> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut coords = vec![Vec::with_capacity(n); sizes.len()];
    for &p in &perm {
        let mut rest = p;
        for (i, &s) in sizes.iter().enumerate().rev() {
            coords[i].push(rest % s);
            rest /= s;
        }
    }
    coords
        .iter()
        .zip(sizes)
        .map(|(labels, &s)| EqRel::from_small_labels(labels, s))
        .collect()
}

/// Checks that non-empty finite sets behave as a very strongly honest
/// category at `A = 0..n`: every ternary square is a pushout, projections are
/// epic, and every binary product is disjoint.
pub fn honesty_spot_check(n: usize, sampling: Sampling) -> Result<Report> {
    let mut r = Report::new(format!("honesty of the {n}-element set"));
    for name in ["ternary_pushout", "projections_epic", "binary_disjoint"] {
        r.pass(name);
    }
    match sampling {
        Sampling::Exhaustive => {
            let d = enumerate_d(n)?;
            honesty_exhaustive_into(&d, &mut r)?;
        }
        Sampling::Seeded { seed, samples } => {
            if n == 0 {
                return Err(Error::EmptySet);
            }
            if n > SAMPLED_SET_LIMIT {
                return Err(Error::LimitExceeded {
                    what: "set",
                    size: n,
                    limit: SAMPLED_SET_LIMIT,
                });
            }
            r.seed = Some(seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let shapes = ordered_factorizations(n);
            for i in 0..samples {
                let sizes = shapes[rng.random_range(0..shapes.len())];
                let c = random_diagram(n, &sizes, &mut rng);
                debug_assert!(is_product(&[&c[0], &c[1], &c[2]]));
                check_ternary(i, [&c[0], &c[1], &c[2]], &mut r)?;
                let b = random_diagram(n, &[sizes[0], sizes[1] * sizes[2]], &mut rng);
                check_binary(i, &b[0], &b[1], &mut r)?;
            }
        }
    }
    Ok(r)
}

pub(crate) fn honesty_exhaustive_into(d: &DecompositionOa, r: &mut Report) -> Result<()> {
    for t in 0..d.ternaries.len() {
        check_ternary(t, d.ternary(t), r)?;
    }
    for (i, e) in d.elems.iter().enumerate() {
        check_binary(i, &e.k1, &e.k2, r)?;
    }
    r.stat("set_size", d.n as i64);
    Ok(())
}

/// Claim-level instance checks on `A = 0..n` (up to the default bound):
/// a product `(p, q)` with `q` bijective has `P ≅ Ω`, and a ternary product
/// `(p, p, q)` has `P ≅ Ω` with `q` bijective.
pub fn claims_check(n: usize) -> Result<Report> {
    if n > DEFAULT_SET_LIMIT {
        return Err(Error::LimitExceeded {
            what: "set",
            size: n,
            limit: DEFAULT_SET_LIMIT,
        });
    }
    let d = enumerate_d(n)?;
    let binaries: Vec<(EqRel, EqRel)> = d.elems.iter().map(|e| (e.k1.clone(), e.k2.clone())).collect();
    let ternaries: Vec<[EqRel; 3]> = (0..d.ternaries.len())
        .map(|t| d.ternary(t).map(Clone::clone))
        .collect();
    let mut r = claims_check_on(&binaries, &ternaries);
    r.subject = format!("decomposition claims on the {n}-element set");
    Ok(r)
}

/// The claim checks over caller-supplied product diagrams, given as kernel
/// tuples. The diagrams are taken to be product diagrams as given.
pub fn claims_check_on(binaries: &[(EqRel, EqRel)], ternaries: &[[EqRel; 3]]) -> Report {
    let mut r = Report::new("decomposition claims");
    r.pass("claim_iso_factor_trivial");
    r.pass("claim_repeated_factor_trivial");
    for (i, (p, q)) in binaries.iter().enumerate() {
        if q.is_identity() {
            r.bump("claim1_instances", 1);
            if p.blocks() != 1 {
                r.fail("claim_iso_factor_trivial", &[i, p.blocks()]);
            }
        }
    }
    for (i, [p1, p2, q]) in ternaries.iter().enumerate() {
        if p1 == p2 {
            r.bump("claim2_instances", 1);
            if p1.blocks() != 1 || !q.is_identity() {
                r.fail("claim_repeated_factor_trivial", &[i, p1.blocks(), q.blocks()]);
            }
        }
    }
    r
}

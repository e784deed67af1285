//! Invariant suites for single instances. Each returns a report whose
//! verdicts cover the axioms, the round trips, intervals and sections.

use crate::error::{Error, Result};
use crate::finset::{claims_check, enumerate_d, honesty_spot_check, cat_section, DecompositionOa, Sampling};
use crate::lattice_fact::{build_l2, lattice_section_with, Mode};
use crate::order::FinLattice;
use crate::ortho::{
    check_oa, check_omp, interval_oa, interval_omp, is_oa_iso, oa_to_orthoposet, omp_to_oa, OrthoAlgebra,
    OrthoPoset,
};
use crate::report::Report;
use crate::ring::{build_er, check_ring, ring_section_with, FinRing};
use crate::setfact::{build_factx, factx_section_with, factx_vs_decompositions};

/// Records an error from a precondition as a red verdict.
fn precondition(r: &mut Report, e: &Error) {
    let witness = match e {
        Error::PreconditionFailed { witness, .. } => witness.clone(),
        _ => Vec::new(),
    };
    r.fail("precondition", &witness);
    r.subject.push_str(&format!(" [{e}]"));
}

/// Axioms, omp/oa round trip, and every interval of an orthomodular poset.
pub fn omp_suite(p: &OrthoPoset) -> Report {
    let mut r = Report::new(format!("orthomodular poset with {} elements", p.len()));
    r.stat("carrier", p.len() as i64);
    let axioms = check_omp(p);
    r.absorb("omp", &axioms);
    if !axioms.ok() {
        return r;
    }
    r.pass("round_trip");
    r.pass("interval_omp");
    r.pass("interval_oa");
    let oa = match omp_to_oa(p) {
        Ok(oa) => oa,
        Err(_) => {
            r.fail("round_trip", &[]);
            return r;
        }
    };
    match oa_to_orthoposet(&oa) {
        Ok((back, is_omp)) if is_omp && back == *p => {}
        _ => r.fail("round_trip", &[p.len()]),
    }
    for a in 0..p.len() {
        match interval_omp(p, a) {
            Ok(iv) if check_omp(&iv.omp).ok() => {}
            _ => r.fail("interval_omp", &[a]),
        }
        match interval_oa(&oa, a) {
            Ok(iv) if iv.escaped == 0 && check_oa(&iv.oa).ok() => {}
            _ => r.fail("interval_oa", &[a]),
        }
    }
    r
}

/// Axioms, the oa -> orthoposet -> oa round trip when the induced poset is
/// orthomodular, and every interval of an orthoalgebra.
pub fn oa_suite(a: &OrthoAlgebra) -> Report {
    let mut r = Report::new(format!("orthoalgebra with {} elements", a.len()));
    r.stat("carrier", a.len() as i64);
    let axioms = check_oa(a);
    r.absorb("oa", &axioms);
    if !axioms.ok() {
        return r;
    }
    r.pass("round_trip");
    r.pass("interval_oa");
    match oa_to_orthoposet(a) {
        Ok((p, true)) => {
            r.stat("induced_omp", 1);
            let identity: Vec<usize> = (0..a.len()).collect();
            match omp_to_oa(&p) {
                Ok(back) if is_oa_iso(a, &back, &identity) => {}
                _ => r.fail("round_trip", &[a.len()]),
            }
        }
        Ok((_, false)) => r.stat("induced_omp", 0),
        Err(_) => r.fail("round_trip", &[a.len()]),
    }
    // Sums of interval elements may leave the interval when the induced
    // poset is not orthomodular; those are counted, not failed.
    r.stat("interval_escapes", 0);
    for top in 0..a.len() {
        match interval_oa(a, top) {
            Ok(iv) if check_oa(&iv.oa).ok() => r.bump("interval_escapes", iv.escaped as i64),
            _ => r.fail("interval_oa", &[top]),
        }
    }
    r
}

/// `L⁽²⁾` is an orthomodular poset and every section certificate is green.
pub fn lattice_suite(l: &FinLattice, mode: Mode) -> Report {
    let mut r = Report::new(format!("lattice with {} elements ({mode:?} mode)", l.len()));
    r.stat("lattice_size", l.len() as i64);
    let l2 = match build_l2(l, mode) {
        Ok(x) => x,
        Err(e) => {
            precondition(&mut r, &e);
            return r;
        }
    };
    r.stat("l2_size", l2.len() as i64);
    r.absorb("l2", &omp_suite(&l2.omp));
    r.pass("sections");
    for &(a, b) in &l2.pairs {
        match lattice_section_with(l, &l2, a, b) {
            Ok(s) => {
                if !s.report.ok() {
                    r.fail("sections", &[a, b]);
                }
                r.absorb("section", &s.report);
            }
            Err(_) => r.fail("sections", &[a, b]),
        }
    }
    r
}

/// E(R) is an orthomodular poset, every ring section is green, and commuting
/// orthogonal idempotents add to their orthogonal sum.
pub fn ring_suite(ring: &FinRing) -> Report {
    let mut r = Report::new(format!("ring with {} elements", ring.len()));
    r.stat("ring_size", ring.len() as i64);
    let rr = check_ring(ring);
    r.absorb("ring", &rr);
    if !rr.ok() {
        return r;
    }
    let er = match build_er(ring) {
        Ok(x) => x,
        Err(e) => {
            precondition(&mut r, &e);
            return r;
        }
    };
    r.stat("idempotents", er.len() as i64);
    let os = omp_suite(&er.omp);
    r.absorb("er", &os);
    r.pass("sections");
    for &e in &er.elems {
        match ring_section_with(ring, &er, e) {
            Ok(s) => {
                if !s.report.ok() {
                    r.fail("sections", &[e]);
                }
                r.absorb("section", &s.report);
            }
            Err(_) => r.fail("sections", &[e]),
        }
    }
    r.pass("orthogonal_sum");
    if let (true, Ok(oa)) = (os.ok(), omp_to_oa(&er.omp)) {
        for (i, &e) in er.elems.iter().enumerate() {
            for (j, &f) in er.elems.iter().enumerate() {
                if ring.mul(e, f) == ring.zero() && ring.mul(f, e) == ring.zero() {
                    let s = ring.add(e, f);
                    if ring.mul(s, s) != s || oa.oplus(i, j).map(|k| er.elems[k]) != Some(s) {
                        r.fail("orthogonal_sum", &[e, f]);
                    }
                }
            }
        }
    }
    r
}

/// Fact X of an `n`-element set, optionally with the bridge to 𝒟(X) and
/// every set-level section.
pub fn set_suite(n: usize, bridge: bool, sections: bool) -> Report {
    let mut r = Report::new(format!("Fact X for a {n}-element set"));
    let fx = match build_factx(n) {
        Ok(x) => x,
        Err(e) => {
            precondition(&mut r, &e);
            return r;
        }
    };
    r.stat("factx_size", fx.len() as i64);
    r.stat("atoms", fx.omp.atoms().len() as i64);
    r.absorb("factx", &omp_suite(&fx.omp));
    if bridge {
        match factx_vs_decompositions(n) {
            Ok(c) => r.absorb("bridge", &c.report),
            Err(e) => precondition(&mut r, &e),
        }
    }
    if sections {
        r.pass("sections");
        match enumerate_d(n) {
            Ok(da) => {
                for i in 0..fx.len() {
                    match factx_section_with(&fx, &da, i) {
                        Ok(s) => {
                            if !s.report.ok() {
                                r.fail("sections", &[i]);
                            }
                            r.absorb("section", &s.report);
                        }
                        Err(_) => r.fail("sections", &[i]),
                    }
                }
            }
            Err(e) => precondition(&mut r, &e),
        }
    }
    r
}

/// Options for [`cat_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatOptions {
    pub honesty: bool,
    pub claims: bool,
    pub sections: bool,
}

/// 𝒟(A) is an orthoalgebra with `d ⊕ d` undefined off zero and well-defined
/// sums, plus optional honesty, claims and every section certificate.
pub fn cat_suite(n: usize, opts: CatOptions) -> Report {
    let mut r = Report::new(format!("decompositions of a {n}-element set"));
    let d = match enumerate_d(n) {
        Ok(x) => x,
        Err(e) => {
            precondition(&mut r, &e);
            return r;
        }
    };
    r.stat("decompositions", d.len() as i64);
    r.stat("ternaries", d.ternaries.len() as i64);
    r.stat("induced_omp", i64::from(d.induced_is_omp()));
    r.absorb("d", &oa_suite(&d.oa));
    r.pass("self_sum_undefined");
    for i in 0..d.len() {
        if i != d.zero() && d.oplus(i, i).is_some() {
            r.fail("self_sum_undefined", &[i]);
        }
    }
    r.pass("sum_well_defined");
    for &(x, y, _, _) in &d.conflicts {
        r.fail("sum_well_defined", &[x, y]);
    }
    if opts.honesty {
        match honesty_spot_check(n, Sampling::Exhaustive) {
            Ok(h) => r.absorb("honesty", &h),
            Err(e) => precondition(&mut r, &e),
        }
    }
    if opts.claims {
        match claims_check(n) {
            Ok(c) => r.absorb("claims", &c),
            Err(e) => precondition(&mut r, &e),
        }
    }
    if opts.sections {
        if let Err(e) = cat_sections_into(&d, &mut r) {
            precondition(&mut r, &e);
        }
    }
    r
}

/// Runs the categorical section certificate for every `h` of `d`.
pub fn cat_sections_into(d: &DecompositionOa, r: &mut Report) -> Result<()> {
    r.pass("sections");
    let mut targets: Vec<Option<DecompositionOa>> = (0..=d.n).map(|_| None).collect();
    for h in 0..d.len() {
        let k = d.elems[h].k1.blocks();
        if targets[k].is_none() {
            targets[k] = Some(enumerate_d(k)?);
        }
        let s = cat_section(d, h, targets[k].as_ref().unwrap())?;
        if !s.report.ok() {
            r.fail("sections", &[h]);
        }
        r.absorb("section", &s.report);
    }
    Ok(())
}

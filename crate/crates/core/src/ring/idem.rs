use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::order::FinPoset;
use crate::ortho::{check_omp, interval_oa, omp_to_oa, OrthoPoset};
use crate::report::Report;

use super::table::{check_ring, FinRing};

/// All `x` with `x·x = x`, ascending.
pub fn idempotents(r: &FinRing) -> Vec<usize> {
    (0..r.len()).filter(|&x| r.mul(x, x) == x).collect()
}

/// E(R): idempotents with `e <= f` iff `ef = e = fe`, and `e' = 1 - e`.
#[derive(Clone, Debug)]
pub struct IdempotentOmp {
    /// Poset id -> ring element.
    pub elems: Vec<usize>,
    pub omp: OrthoPoset,
    index: HashMap<usize, usize>,
}

impl IdempotentOmp {
    /// Poset id of a ring element, if it is idempotent.
    pub fn id_of(&self, x: usize) -> Option<usize> {
        self.index.get(&x).copied()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

pub fn build_er(r: &FinRing) -> Result<IdempotentOmp> {
    let elems = idempotents(r);
    let index: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let poset = FinPoset::from_fn(elems.len(), |a, b| {
        let (e, f) = (elems[a], elems[b]);
        r.mul(e, f) == e && r.mul(f, e) == e
    })?;
    let ocomp = elems
        .iter()
        .map(|&e| {
            index
                .get(&r.sub(r.one(), e))
                .copied()
                .ok_or_else(|| Error::InvalidRing(format!("1 - {e} is not idempotent")))
        })
        .collect::<Result<Vec<_>>>()?;
    let omp = OrthoPoset::new(poset, ocomp)?;
    Ok(IdempotentOmp { elems, omp, index })
}

/// The corner ring `R_e = {x : ex = x = xe}` with unit `e`.
#[derive(Clone, Debug)]
pub struct Corner {
    pub ring: FinRing,
    /// Corner id -> element of the ambient ring.
    pub embed: Vec<usize>,
}

pub fn corner_ring(r: &FinRing, e: usize) -> Result<Corner> {
    if e >= r.len() {
        return Err(Error::OutOfRange(e, r.len()));
    }
    if r.mul(e, e) != e {
        return Err(Error::NotIdempotent(e));
    }
    let embed: Vec<usize> = (0..r.len())
        .filter(|&x| r.mul(e, x) == x && r.mul(x, e) == x)
        .collect();
    let local: HashMap<usize, usize> = embed.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let back = |x: usize| local.get(&x).copied().unwrap_or(usize::MAX);
    let ring = FinRing::tabulate(
        embed.len(),
        |a, b| back(r.add(embed[a], embed[b])),
        |a, b| back(r.mul(embed[a], embed[b])),
        back(r.zero()),
        back(e),
    );
    Ok(Corner { ring, embed })
}

/// Certificate that `e↓` in E(R) equals E(R_e) with matching orthocomplements.
#[derive(Debug)]
pub struct RingSection {
    pub report: Report,
    pub e: usize,
    /// Ring elements of `e↓`, ascending.
    pub interval: Vec<usize>,
    pub corner: Corner,
}

pub fn ring_section(r: &FinRing, e: usize) -> Result<RingSection> {
    let er = build_er(r)?;
    ring_section_with(r, &er, e)
}

pub fn ring_section_with(r: &FinRing, er: &IdempotentOmp, e: usize) -> Result<RingSection> {
    if e >= r.len() {
        return Err(Error::OutOfRange(e, r.len()));
    }
    let ei = er.id_of(e).ok_or(Error::NotIdempotent(e))?;
    let corner = corner_ring(r, e)?;
    let mut rep = Report::new(format!("section of E(R) below idempotent {e}"));
    for name in [
        "corner_is_ring",
        "corner_omp",
        "carrier_equal",
        "order_equal",
        "ocomp_oa",
        "ocomp_meet",
        "ocomp_product",
        "ocomp_corner",
    ] {
        rep.pass(name);
    }
    let cr = check_ring(&corner.ring);
    if !cr.ok() {
        rep.absorb("corner", &cr);
        rep.fail("corner_is_ring", &[e]);
    }
    let ec = build_er(&corner.ring)?;
    let omp_rep = check_omp(&ec.omp);
    if !omp_rep.ok() {
        rep.absorb("corner", &omp_rep);
        rep.fail("corner_omp", &[e]);
    }

    let interval: Vec<usize> = er
        .elems
        .iter()
        .enumerate()
        .filter(|&(i, _)| er.omp.leq(i, ei))
        .map(|(_, &f)| f)
        .collect();
    let mut corner_idem: Vec<usize> = ec.elems.iter().map(|&c| corner.embed[c]).collect();
    corner_idem.sort_unstable();
    if interval != corner_idem {
        let w: Vec<usize> = interval
            .iter()
            .filter(|f| !corner_idem.contains(f))
            .chain(corner_idem.iter().filter(|f| !interval.contains(f)))
            .copied()
            .collect();
        rep.fail("carrier_equal", &w);
    }
    rep.stat("interval_size", interval.len() as i64);

    let corner_id = |x: usize| corner.embed.binary_search(&x).ok();
    for &f in &interval {
        for &g in &interval {
            let in_er = er.omp.leq(er.id_of(f).unwrap(), er.id_of(g).unwrap());
            let (Some(a), Some(b)) = (
                corner_id(f).and_then(|c| ec.id_of(c)),
                corner_id(g).and_then(|c| ec.id_of(c)),
            ) else {
                continue;
            };
            let in_corner = ec.omp.leq(a, b);
            if in_er != in_corner {
                rep.fail("order_equal", &[f, g]);
            }
        }
    }

    let oa = omp_to_oa(&er.omp)?;
    let down = interval_oa(&oa, ei)?;
    let mut meets_missing = 0;
    for &f in &interval {
        let expected = r.sub(e, f);
        let fi = er.id_of(f).unwrap();
        let via_oa = down
            .local(fi)
            .and_then(|l| down.oa.complement(l))
            .map(|c| er.elems[down.embed[c]]);
        if via_oa != Some(expected) {
            rep.fail("ocomp_oa", &[f]);
        }
        match er.omp.meet(er.omp.ocomp(fi), ei) {
            Some(m) if er.elems[m] != expected => rep.fail("ocomp_meet", &[f]),
            Some(_) => {}
            None => meets_missing += 1,
        }
        if r.mul(r.sub(r.one(), f), e) != expected {
            rep.fail("ocomp_product", &[f]);
        }
        let via_corner = corner_id(f)
            .and_then(|c| ec.id_of(c))
            .map(|c| corner.embed[ec.elems[ec.omp.ocomp(c)]]);
        if via_corner != Some(expected) {
            rep.fail("ocomp_corner", &[f]);
        }
    }
    rep.stat("meets_missing", meets_missing);
    Ok(RingSection {
        report: rep,
        e,
        interval,
        corner,
    })
}

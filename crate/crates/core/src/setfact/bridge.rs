use crate::error::{Error, Result};
use crate::finset::{cat_section, enumerate_d, Decomposition, DecompositionOa};
use crate::ortho::{check_oa, check_omp, interval_omp, is_omp_iso, oa_to_orthoposet, omp_to_oa, IntervalOmp};
use crate::report::Report;

use super::factx::{build_factx, FactX, FactorPair};

/// How a decomposition `[f1, f2]` is read as a factor pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelConvention {
    /// `[f1, f2] ↦ (ker f2, ker f1)`
    Swapped,
    /// `[f1, f2] ↦ (ker f1, ker f2)`
    Direct,
}

/// The convention used by the bridge. `Direct` sends the zero `[τ, 1]` to the
/// top `(∇, Δ)` of Fact X and is rejected by the bridge certificate.
pub const KERNEL_CONVENTION: KernelConvention = KernelConvention::Swapped;

pub fn pair_to_decomposition(p: &FactorPair, conv: KernelConvention) -> Decomposition {
    match conv {
        KernelConvention::Swapped => Decomposition {
            k1: p.theta2.clone(),
            k2: p.theta1.clone(),
        },
        KernelConvention::Direct => Decomposition {
            k1: p.theta1.clone(),
            k2: p.theta2.clone(),
        },
    }
}

pub fn decomposition_to_pair(d: &Decomposition, conv: KernelConvention) -> FactorPair {
    match conv {
        KernelConvention::Swapped => FactorPair {
            theta1: d.k2.clone(),
            theta2: d.k1.clone(),
        },
        KernelConvention::Direct => FactorPair {
            theta1: d.k1.clone(),
            theta2: d.k2.clone(),
        },
    }
}

/// An explicit map Fact X -> 𝒟(X) with its verdicts.
#[derive(Debug)]
pub struct BridgeCertificate {
    pub report: Report,
    /// Fact X id -> 𝒟(X) id.
    pub map: Vec<Option<usize>>,
}

/// Certifies that Fact X and 𝒟(X) are the same orthostructure for an
/// `n`-element set, under [`KERNEL_CONVENTION`].
pub fn factx_vs_decompositions(n: usize) -> Result<BridgeCertificate> {
    let fx = build_factx(n)?;
    let d = enumerate_d(n)?;
    bridge_with(&fx, &d, KERNEL_CONVENTION)
}

pub fn bridge_with(fx: &FactX, d: &DecompositionOa, conv: KernelConvention) -> Result<BridgeCertificate> {
    if fx.n != d.n {
        return Err(Error::SizeMismatch(fx.n, d.n));
    }
    let mut r = Report::new(format!("Fact X vs 𝒟(X) for a {}-element set", fx.n));
    for name in [
        "factx_omp",
        "decompositions_oa",
        "total",
        "bijective",
        "bot_to_zero",
        "top_to_one",
        "order_preserved",
        "ocomp_preserved",
        "oplus_agree",
    ] {
        r.pass(name);
    }
    r.stat("factx_size", fx.len() as i64);
    r.stat("decompositions_size", d.len() as i64);
    let omp_report = check_omp(&fx.omp);
    r.absorb("factx", &omp_report);
    if !omp_report.ok() {
        r.fail("factx_omp", &[fx.n]);
    }
    let oa_report = check_oa(&d.oa);
    r.absorb("decompositions", &oa_report);
    if !oa_report.ok() {
        r.fail("decompositions_oa", &[d.n]);
    }

    let map: Vec<Option<usize>> = fx
        .pairs
        .iter()
        .map(|p| d.index_of(&pair_to_decomposition(p, conv)))
        .collect();
    for (i, m) in map.iter().enumerate() {
        if m.is_none() {
            r.fail("total", &[i]);
        }
    }
    let mut hit = vec![false; d.len()];
    let injective = map.iter().flatten().all(|&j| !std::mem::replace(&mut hit[j], true));
    if !(injective && fx.len() == d.len() && map.iter().all(Option::is_some)) {
        r.fail("bijective", &[fx.len(), d.len()]);
    }
    if map[fx.omp.bot()] != Some(d.zero()) {
        r.fail("bot_to_zero", &[fx.omp.bot()]);
    }
    if map[fx.omp.top()] != Some(d.one()) {
        r.fail("top_to_one", &[fx.omp.top()]);
    }
    if !r.ok() {
        return Ok(BridgeCertificate { report: r, map });
    }
    let full: Vec<usize> = map.iter().map(|m| m.unwrap()).collect();

    let (dp, induced_omp) = oa_to_orthoposet(&d.oa)?;
    r.stat("decompositions_induced_omp", i64::from(induced_omp));
    for i in 0..fx.len() {
        for j in 0..fx.len() {
            if fx.omp.leq(i, j) != dp.leq(full[i], full[j]) {
                r.fail("order_preserved", &[i, j]);
            }
        }
        if full[fx.omp.ocomp(i)] != dp.ocomp(full[i]) {
            r.fail("ocomp_preserved", &[i]);
        }
    }
    let fx_oa = omp_to_oa(&fx.omp)?;
    for i in 0..fx.len() {
        for j in 0..fx.len() {
            if fx_oa.oplus(i, j).map(|v| full[v]) != d.oplus(full[i], full[j]) {
                r.fail("oplus_agree", &[i, j]);
            }
        }
    }
    Ok(BridgeCertificate { report: r, map })
}

/// Certificate that the interval below a factor pair of Fact X is Fact X of
/// the corresponding factor, obtained by transporting the categorical
/// section map through the bridge.
#[derive(Debug)]
pub struct SetSection {
    pub report: Report,
    pub interval: IntervalOmp,
    pub target: FactX,
    /// Interval-local id -> id in the target Fact X.
    pub map: Vec<Option<usize>>,
}

/// The set-level section at Fact X element `i` of an `n`-element set.
pub fn factx_section(n: usize, i: usize) -> Result<SetSection> {
    let fx = build_factx(n)?;
    let da = enumerate_d(n)?;
    factx_section_with(&fx, &da, i)
}

pub fn factx_section_with(fx: &FactX, da: &DecompositionOa, i: usize) -> Result<SetSection> {
    let conv = KERNEL_CONVENTION;
    let pair = fx.pairs.get(i).ok_or(Error::OutOfRange(i, fx.len()))?;
    let h_dec = pair_to_decomposition(pair, conv);
    let h = da
        .index_of(&h_dec)
        .ok_or_else(|| Error::Invalid(format!("factor pair {i} has no decomposition")))?;
    let k = h_dec.k1.blocks();
    let target = build_factx(k)?;
    let dh = enumerate_d(k)?;
    let cat = cat_section(da, h, &dh)?;
    let interval = interval_omp(&fx.omp, i)?;

    let mut r = Report::new(format!("section of Fact X ({n} points) below pair {i}", n = fx.n));
    r.stat("interval_size", interval.omp.len() as i64);
    r.stat("target_size", target.len() as i64);
    r.stat("factor_size", k as i64);
    r.absorb("categorical", &cat.report);
    r.pass("map_defined");
    r.pass("omp_isomorphism");
    let map: Vec<Option<usize>> = interval
        .embed
        .iter()
        .map(|&p| {
            let dp = da.index_of(&pair_to_decomposition(&fx.pairs[p], conv))?;
            let g = cat.gamma[cat.interval.local(dp)?]?;
            target.index_of(&decomposition_to_pair(&dh.elems[g], conv))
        })
        .collect();
    for (l, m) in map.iter().enumerate() {
        if m.is_none() {
            r.fail("map_defined", &[l]);
        }
    }
    if map.iter().all(Option::is_some) {
        let full: Vec<usize> = map.iter().map(|m| m.unwrap()).collect();
        if !is_omp_iso(&interval.omp, &target.omp, &full) {
            r.fail("omp_isomorphism", &[i]);
        }
    }
    Ok(SetSection {
        report: r,
        interval,
        target,
        map,
    })
}

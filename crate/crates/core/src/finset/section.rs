use crate::error::{Error, Result};
use crate::ortho::{interval_oa, IntervalOa};
use crate::report::Report;
use crate::setfact::{rel_meet, EqRel};

use super::decomp::{enumerate_d, Decomposition, DecompositionOa};

/// Certificate that the interval `h↓` of 𝒟(A) is isomorphic to 𝒟(H1) for
/// `h = [h1, h2]`.
#[derive(Debug)]
pub struct CatSection {
    pub report: Report,
    /// Index of `h` in 𝒟(A).
    pub h: usize,
    pub interval: IntervalOa,
    /// Interval-local id -> id in 𝒟(H1).
    pub gamma: Vec<Option<usize>>,
    /// Id in 𝒟(H1) -> interval-local id.
    pub phi: Vec<Option<usize>>,
    /// Whether the orthoposet induced on 𝒟(H1) is orthomodular.
    pub target_is_omp: bool,
}

/// Convenience wrapper: enumerates 𝒟(A) and 𝒟(H1) and certifies section `h`.
pub fn cat_section_for(n: usize, h: usize) -> Result<CatSection> {
    let da = enumerate_d(n)?;
    let hd = da.elems.get(h).ok_or(Error::OutOfRange(h, da.len()))?;
    let dh = enumerate_d(hd.k1.blocks())?;
    cat_section(&da, h, &dh)
}

/// Builds `Γ: h↓ -> 𝒟(H1)` and `Φ: 𝒟(H1) -> h↓` and checks that they are
/// mutually inverse, preserve `⊕` and preserve the bounds.
///
/// `Γ[f1, f2] = [γ1, γ2]` where `[f1, f2] ⊕ [g1, g2] = h` and
/// `γ ∘ h1 = (f1, g1)`; `Φ[m1, m2] = [m1 h1, (m2 h1, h2)]`.
pub fn cat_section(da: &DecompositionOa, h: usize, dh: &DecompositionOa) -> Result<CatSection> {
    let hd = da.elems.get(h).ok_or(Error::OutOfRange(h, da.len()))?;
    let m = hd.k1.blocks();
    if dh.n != m {
        return Err(Error::PreconditionFailed {
            reason: format!("target has {} points, but H1 has {m}", dh.n),
            witness: vec![h, dh.n, m],
        });
    }
    let h1 = hd.k1.labels();
    let interval = interval_oa(&da.oa, h)?;
    let mut r = Report::new(format!("section of 𝒟({}) below decomposition {h}", da.n));
    for name in [
        "interval_closed",
        "complement_unique",
        "gamma_pointwise",
        "gamma_defined",
        "gamma_factorizes",
        "phi_in_interval",
        "phi_witness_sum",
        "mutually_inverse",
        "gamma_preserves_oplus",
        "phi_preserves_oplus",
        "bounds",
    ] {
        r.pass(name);
    }
    r.stat("interval_size", interval.oa.len() as i64);
    r.stat("target_size", dh.len() as i64);
    if interval.escaped != 0 {
        r.fail("interval_closed", &[h, interval.escaped]);
    }

    let mut gamma = vec![None; interval.embed.len()];
    for (local, &d) in interval.embed.iter().enumerate() {
        let partners: Vec<usize> = da.oa.partners(d).filter(|&g| da.oplus(d, g) == Some(h)).collect();
        let &[g] = partners.as_slice() else {
            let mut w = vec![d];
            w.extend(&partners);
            r.fail("complement_unique", &w);
            continue;
        };
        let f1 = da.elems[d].k1.labels();
        let g1 = da.elems[g].k1.labels();
        let (nf, ng) = (da.elems[d].k1.blocks(), da.elems[g].k1.blocks());
        // γ(β) = (f1 x, g1 x) for any x with h1 x = β.
        let mut point: Vec<Option<(usize, usize)>> = vec![None; m];
        let mut consistent = true;
        for x in 0..da.n {
            let v = (f1[x], g1[x]);
            match point[h1[x]] {
                Some(old) if old != v => {
                    r.fail("gamma_pointwise", &[d, x]);
                    consistent = false;
                }
                _ => point[h1[x]] = Some(v),
            }
        }
        if !consistent || point.iter().any(Option::is_none) {
            continue;
        }
        let point: Vec<(usize, usize)> = point.into_iter().map(Option::unwrap).collect();
        let mut hit = vec![false; nf * ng];
        let bijective = nf * ng == m && point.iter().all(|&(a, b)| !std::mem::replace(&mut hit[a * ng + b], true));
        let g1_map: Vec<usize> = point.iter().map(|p| p.0).collect();
        let g2_map: Vec<usize> = point.iter().map(|p| p.1).collect();
        let cand = Decomposition {
            k1: EqRel::from_small_labels(&g1_map, nf),
            k2: EqRel::from_small_labels(&g2_map, ng),
        };
        match dh.index_of(&cand).filter(|_| bijective) {
            Some(id) => {
                gamma[local] = Some(id);
                // Γ[f1, f2] = [γ1, γ2] iff γ1 h1 = f1 and γ2 h1 = g1 (up to ≃).
                let ok = cand.k1.pullback(h1) == da.elems[d].k1 && cand.k2.pullback(h1) == da.elems[g].k1;
                r.check("gamma_factorizes", ok, &[d, id]);
            }
            None => r.fail("gamma_defined", &[d]),
        }
    }

    let mut phi = vec![None; dh.len()];
    for (j, md) in dh.elems.iter().enumerate() {
        let m1h1 = md.k1.pullback(h1);
        let m2h1 = md.k2.pullback(h1);
        let image = Decomposition {
            k1: m1h1.clone(),
            k2: rel_meet(&m2h1, &hd.k2)?,
        };
        let partner = Decomposition {
            k1: m2h1,
            k2: rel_meet(&m1h1, &hd.k2)?,
        };
        let (Some(pi), Some(qi)) = (da.index_of(&image), da.index_of(&partner)) else {
            r.fail("phi_in_interval", &[j]);
            continue;
        };
        if da.oplus(pi, qi) != Some(h) {
            r.fail("phi_witness_sum", &[j, pi, qi]);
        }
        match interval.local(pi) {
            Some(local) => phi[j] = Some(local),
            None => r.fail("phi_in_interval", &[j, pi]),
        }
    }

    for (local, g) in gamma.iter().enumerate() {
        if g.and_then(|id| phi[id]) != Some(local) {
            r.fail("mutually_inverse", &[local]);
        }
    }
    for (j, p) in phi.iter().enumerate() {
        if p.and_then(|local| gamma[local]) != Some(j) {
            r.fail("mutually_inverse", &[j]);
        }
    }
    for (x, y, v) in interval.oa.triples() {
        let ok = match (gamma[x], gamma[y], gamma[v]) {
            (Some(gx), Some(gy), Some(gv)) => dh.oplus(gx, gy) == Some(gv),
            _ => false,
        };
        r.check("gamma_preserves_oplus", ok, &[x, y]);
    }
    for (x, y, v) in dh.oa.triples() {
        let ok = match (phi[x], phi[y], phi[v]) {
            (Some(px), Some(py), Some(pv)) => interval.oa.oplus(px, py) == Some(pv),
            _ => false,
        };
        r.check("phi_preserves_oplus", ok, &[x, y]);
    }
    let zero_local = interval.oa.zero();
    let one_local = interval.oa.one();
    if gamma[zero_local] != Some(dh.zero()) || phi[dh.zero()] != Some(zero_local) {
        r.fail("bounds", &[0]);
    }
    if gamma[one_local] != Some(dh.one()) || phi[dh.one()] != Some(one_local) {
        r.fail("bounds", &[1]);
    }
    let target_is_omp = dh.induced_is_omp();
    r.stat("target_induced_omp", i64::from(target_is_omp));
    Ok(CatSection {
        report: r,
        h,
        interval,
        gamma,
        phi,
        target_is_omp,
    })
}

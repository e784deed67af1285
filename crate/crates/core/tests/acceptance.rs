//! Acceptance suite: one PASS/FAIL line per criterion. Counts are checked
//! against brute-force oracles defined here, independent of the library.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fact_core::finset::{claims_check, enumerate_d, honesty_spot_check, Decomposition, Sampling};
use fact_core::lattice_fact::{build_l2, lattice_section_with, Mode};
use fact_core::order::gen::{boolean, m3, mo, subspace_lattice};
use fact_core::order::FinLattice;
use fact_core::ortho::{check_oa, check_omp};
use fact_core::ring::{build_er, idempotents, mat, product_zn, ring_section_with, zn, FinRing};
use fact_core::setfact::{build_factx, factx_vs_decompositions, EqRel};
use fact_core::suite::{cat_sections_into, oa_suite, omp_suite};
use fact_core::Report;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Self {
            ok: true,
            detail: String::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.ok = false;
            if self.detail.len() < 600 {
                self.detail.push_str(&what());
                self.detail.push_str("; ");
            }
        }
    }

    fn budget(&mut self, start: Instant, limit: Duration) {
        let took = start.elapsed();
        self.require(took <= limit, || format!("took {took:?}, budget {limit:?}"));
        if self.ok {
            self.detail = format!("{:.1}s", took.as_secs_f64());
        }
    }
}

// Oracles.

fn oracle_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        let next = cur.iter().copied().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            cur.push(b);
            go(i + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

/// Pairs of partitions whose joint labelling is a bijection onto the product
/// of block sets: the factor pairs of a finite set.
fn oracle_factor_pairs(n: usize) -> usize {
    let parts = oracle_partitions(n);
    let blocks = |p: &[usize]| p.iter().max().map_or(0, |m| m + 1);
    let mut count = 0;
    for a in &parts {
        for b in &parts {
            let (ka, kb) = (blocks(a), blocks(b));
            if ka * kb != n {
                continue;
            }
            let mut seen = vec![false; n];
            let injective = (0..n).all(|x| !std::mem::replace(&mut seen[a[x] * kb + b[x]], true));
            if injective {
                count += 1;
            }
        }
    }
    count
}

fn oracle_complementary_pairs(l: &FinLattice) -> usize {
    let n = l.len();
    let p = l.poset();
    let is_bot = |z: usize| (0..n).all(|w| p.leq(z, w));
    let is_top = |z: usize| (0..n).all(|w| p.leq(w, z));
    (0..n * n)
        .filter(|&k| {
            let (x, y) = (k / n, k % n);
            (0..n).all(|z| !(p.leq(z, x) && p.leq(z, y)) || is_bot(z))
                && (0..n).all(|z| !(p.leq(x, z) && p.leq(y, z)) || is_top(z))
        })
        .count()
}

// Corpora.

fn lattice_corpus() -> Vec<(String, FinLattice)> {
    let mut out = Vec::new();
    for k in 0..=4 {
        out.push((format!("2^{k}"), boolean(k).unwrap()));
    }
    for k in 1..=4 {
        out.push((format!("MO{k}"), mo(k).unwrap()));
    }
    out.push(("M3".into(), m3().unwrap()));
    for (q, d) in [(2, 2), (2, 3), (3, 2)] {
        out.push((format!("Sub(GF({q})^{d})"), subspace_lattice(q, d).unwrap()));
    }
    out
}

fn products_upto(max_factors: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (2..=max_size).map(|m| vec![m]).collect();
    while let Some(ms) = stack.pop() {
        let size: usize = ms.iter().product();
        if ms.len() >= 2 {
            out.push(ms.clone());
        }
        if ms.len() < max_factors {
            for m in *ms.last().unwrap()..=max_size / size {
                let mut next = ms.clone();
                next.push(m);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

fn ring_corpus() -> Vec<(String, FinRing)> {
    let mut out: Vec<(String, FinRing)> = (1..=24).map(|n| (format!("Z{n}"), zn(n).unwrap())).collect();
    for ms in products_upto(3, 64) {
        out.push((format!("{ms:?}"), product_zn(&ms).unwrap()));
    }
    out.push(("M2(GF(2))".into(), mat(2, 2).unwrap()));
    out.push(("M2(GF(3))".into(), mat(2, 3).unwrap()));
    out
}

fn fails(r: &Report) -> String {
    r.failed().map(|v| v.name.clone()).collect::<Vec<_>>().join(",")
}

// Criteria.

fn c1(o: &mut Outcome) {
    let t = Instant::now();
    for (name, l) in lattice_corpus() {
        let l2 = build_l2(&l, Mode::Modular).unwrap();
        o.require(l2.len() == oracle_complementary_pairs(&l), || format!("{name}: pair count"));
        let r = check_omp(&l2.omp);
        o.require(r.ok(), || format!("{name}: {}", fails(&r)));
    }
    o.budget(t, Duration::from_secs(60));
}

fn c2(o: &mut Outcome) {
    let t = Instant::now();
    for (name, r) in ring_corpus() {
        let er = build_er(&r).unwrap();
        let rep = check_omp(&er.omp);
        o.require(rep.ok(), || format!("{name}: {}", fails(&rep)));
    }
    for n in 1..=24 {
        let oracle: Vec<usize> = (0..n).filter(|&x| x * x % n == x).collect();
        o.require(idempotents(&zn(n).unwrap()) == oracle, || format!("E(Z{n}) differs from scan"));
    }
    let e6 = build_er(&zn(6).unwrap()).unwrap();
    o.require(e6.elems == [0, 1, 3, 4], || format!("E(Z6) = {:?}", e6.elems));
    o.budget(t, Duration::from_secs(60));
}

fn c3(o: &mut Outcome) {
    let t = Instant::now();
    for n in 1..=8 {
        let fx = build_factx(n).unwrap();
        let r = check_omp(&fx.omp);
        o.require(r.ok(), || format!("n={n}: {}", fails(&r)));
        let oracle = oracle_factor_pairs(n);
        o.require(fx.len() == oracle, || format!("n={n}: {} vs oracle {oracle}", fx.len()));
        let expected = match n {
            1 | 2 | 3 | 5 | 7 => Some(2),
            4 => Some(8),
            _ => None,
        };
        if let Some(e) = expected {
            o.require(fx.len() == e, || {
                format!("n={n}: |Fact X| = {} (oracle {oracle}), criterion expects {e}", fx.len())
            });
        }
    }
    o.budget(t, Duration::from_secs(120));
}

fn c4(o: &mut Outcome) {
    for (name, l) in lattice_corpus() {
        let l2 = build_l2(&l, Mode::Modular).unwrap();
        for &(a, b) in &l2.pairs {
            let s = lattice_section_with(&l, &l2, a, b).unwrap();
            o.require(s.report.ok(), || format!("{name} ({a},{b}): {}", fails(&s.report)));
        }
    }
}

fn c5(o: &mut Outcome) {
    for (name, r) in ring_corpus() {
        let er = build_er(&r).unwrap();
        for &e in &er.elems {
            let s = ring_section_with(&r, &er, e).unwrap();
            o.require(s.report.ok(), || format!("{name} e={e}: {}", fails(&s.report)));
            // Literal carrier equality from the tables.
            let below: Vec<usize> = (0..r.len())
                .filter(|&f| r.mul(f, f) == f && r.mul(e, f) == f && r.mul(f, e) == f)
                .collect();
            let corner_idem: Vec<usize> = (0..r.len())
                .filter(|&x| r.mul(e, x) == x && r.mul(x, e) == x && r.mul(x, x) == x)
                .collect();
            o.require(below == corner_idem && s.interval == below, || format!("{name} e={e}: carrier"));
            for &f in &below {
                let sharp = r.add(e, r.neg(f));
                let unique: Vec<usize> = below
                    .iter()
                    .copied()
                    .filter(|&d| r.mul(f, d) == r.zero() && r.mul(d, f) == r.zero() && r.add(f, d) == e)
                    .collect();
                o.require(unique == [sharp], || format!("{name} e={e} f={f}: f# = {unique:?}"));
            }
        }
    }
}

fn c6(o: &mut Outcome) {
    for n in 1..=8 {
        let d = enumerate_d(n).unwrap();
        let r = check_oa(&d.oa);
        o.require(r.ok(), || format!("n={n}: {}", fails(&r)));
        o.require(d.len() == oracle_factor_pairs(n), || format!("n={n}: |D| = {}", d.len()));
        for i in 0..d.len() {
            if i != d.zero() {
                o.require(d.oplus(i, i).is_none(), || format!("n={n}: {i} ⊕ {i} defined"));
            }
        }
    }
}

fn c7(o: &mut Outcome) {
    for n in [4, 6, 8] {
        let r = honesty_spot_check(n, Sampling::Exhaustive).unwrap();
        o.require(r.ok(), || format!("honesty n={n}: {}", fails(&r)));
        o.require(r.get_stat("ternaries_checked").unwrap_or(0) > 0, || format!("n={n}: no ternaries"));
    }
    for n in 1..=6 {
        let r = claims_check(n).unwrap();
        o.require(r.ok(), || format!("claims n={n}: {}", fails(&r)));
    }
}

fn c8(o: &mut Outcome) {
    for n in 1..=8 {
        let d = enumerate_d(n).unwrap();
        let mut r = Report::new("sections");
        cat_sections_into(&d, &mut r).unwrap();
        o.require(r.ok(), || format!("n={n}: {}", fails(&r)));
    }
    let d8 = enumerate_d(8).unwrap();
    let h = Decomposition::new(
        EqRel::from_labels(&[0, 0, 1, 1, 2, 2, 3, 3]),
        EqRel::from_labels(&[0, 1, 0, 1, 0, 1, 0, 1]),
    )
    .unwrap();
    let hi = d8.index_of(&h).unwrap();
    let below = (0..d8.len()).filter(|&x| d8.oa.leq(x, hi)).count();
    let oracle = oracle_factor_pairs(4);
    o.require(below == 8 && oracle == 8, || format!("|h↓| = {below}, |D(4)| oracle = {oracle}"));
}

fn c9(o: &mut Outcome) -> String {
    for n in 1..=6 {
        let c = factx_vs_decompositions(n).unwrap();
        o.require(c.report.ok(), || format!("n={n}: {}", fails(&c.report)));
    }
    let t = Instant::now();
    let stretch = (7..=8).all(|n| factx_vs_decompositions(n).unwrap().report.ok());
    let took = t.elapsed();
    format!(
        "stretch n<=8: {} in {:.1}s",
        if stretch && took <= Duration::from_secs(600) { "green" } else { "red" },
        took.as_secs_f64()
    )
}

fn c10(o: &mut Outcome) {
    let mut check = |label: String, r: Report| o.require(r.ok(), || format!("{label}: {}", fails(&r)));
    for (name, l) in lattice_corpus() {
        check(name, omp_suite(&build_l2(&l, Mode::Modular).unwrap().omp));
    }
    for (name, r) in ring_corpus() {
        check(name, omp_suite(&build_er(&r).unwrap().omp));
    }
    for n in 1..=8 {
        check(format!("Fact {n}"), omp_suite(&build_factx(n).unwrap().omp));
        check(format!("D({n})"), oa_suite(&enumerate_d(n).unwrap().oa));
    }
}

fn main() -> ExitCode {
    let mut all = true;
    let mut run = |id: u32, title: &str, f: &dyn Fn(&mut Outcome) -> Option<String>| {
        let mut o = Outcome::new();
        let extra = f(&mut o);
        all &= o.ok;
        let mut detail = o.detail.trim_end_matches("; ").to_string();
        if let Some(x) = extra {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str(&x);
        }
        println!(
            "criterion {id:>2} {:<4} {title}{}",
            if o.ok { "PASS" } else { "FAIL" },
            if detail.is_empty() { String::new() } else { format!(" ({detail})") }
        );
    };
    run(1, "L(2) is an OMP over the lattice corpus", &|o| {
        c1(o);
        None
    });
    run(2, "E(R) is an OMP over the ring corpus", &|o| {
        c2(o);
        None
    });
    run(3, "Fact X is an OMP for n <= 8 with the stated sizes", &|o| {
        c3(o);
        None
    });
    run(4, "lattice sections", &|o| {
        c4(o);
        None
    });
    run(5, "ring sections", &|o| {
        c5(o);
        None
    });
    run(6, "D(A) is an orthoalgebra for |A| <= 8", &|o| {
        c6(o);
        None
    });
    run(7, "honesty and claims", &|o| {
        c7(o);
        None
    });
    run(8, "categorical sections", &|o| {
        c8(o);
        None
    });
    run(9, "Fact X agrees with D(X)", &|o| Some(c9(o)));
    run(10, "round trips and intervals", &|o| {
        c10(o);
        None
    });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

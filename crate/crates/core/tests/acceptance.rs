//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use semlab::bounds::{j_threshold, prism_bounds};
use semlab::enumerate::{enumerate_graphs, enumerate_k_minus, enumerate_trees};
use semlab::graph::{build_complete, build_lower_bound_witness, build_prism};
use semlab::labeling::{check_sem_certificate, gap, sum_set, SemCertificate};
use semlab::search::{
    deficiency, deficiency_by_search, deficiency_upper_via_alpha, find_alpha_valuation, find_graceful,
    find_harmonious, find_sem_labeling, find_sequential, strength, DeficiencyResult, SearchBudget,
};
use semlab::sidon::{
    certify_infinite_deficiency, check_infinity_certificate, kotzig_lower_bound, rho_star, InfinityCertificate,
};
use semlab::Graph;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g6(g: &Graph) -> String {
    semlab::emit_graph6(g).unwrap()
}

fn k_minus_edge(n: usize) -> Graph {
    let kn = build_complete(n).unwrap();
    Graph::new(n, kn.edges().iter().copied().filter(|&e| e != (0, 1))).unwrap()
}

// ---- independent oracles -------------------------------------------------

/// Calls `visit` on every injection of `0..n` into `values`, stopping early
/// when it returns true.
fn injections(n: usize, values: &[u32], visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
    fn rec(n: usize, values: &[u32], used: &mut Vec<bool>, cur: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if cur.len() == n {
            return visit(cur);
        }
        for i in 0..values.len() {
            if !used[i] {
                used[i] = true;
                cur.push(values[i]);
                let stop = rec(n, values, used, cur, visit);
                cur.pop();
                used[i] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    rec(n, values, &mut vec![false; values.len()], &mut Vec::new(), visit)
}

fn sums(g: &Graph, f: &[u32]) -> Vec<u32> {
    let mut s: Vec<u32> = g.edges().iter().map(|&(u, v)| f[u] + f[v]).collect();
    s.sort_unstable();
    s
}

fn distinct_consecutive(s: &[u32]) -> bool {
    s.windows(2).all(|w| w[1] == w[0] + 1)
}

fn oracle_deficiency(g: &Graph, cap: u32) -> Option<u32> {
    let p = g.order() as u32;
    (0..=cap).find(|&k| {
        let labels: Vec<u32> = (1..=p + k).collect();
        injections(g.order(), &labels, &mut |f| distinct_consecutive(&sums(g, f)))
    })
}

fn oracle_strength(g: &Graph) -> u32 {
    let labels: Vec<u32> = (1..=g.order() as u32).collect();
    let mut best = u32::MAX;
    injections(g.order(), &labels, &mut |f| {
        best = best.min(*sums(g, f).last().unwrap());
        false
    });
    best
}

/// (graceful exists, α-valuation exists)
fn oracle_graceful(g: &Graph) -> (bool, bool) {
    let q = g.size() as u32;
    let labels: Vec<u32> = (0..=q).collect();
    let mut out = (false, false);
    injections(g.order(), &labels, &mut |f| {
        let mut d: Vec<u32> = g.edges().iter().map(|&(u, v)| f[u].abs_diff(f[v])).collect();
        d.sort_unstable();
        if d == (1..=q).collect::<Vec<_>>() {
            out.0 = true;
            let lam = (0..q).any(|l| g.edges().iter().all(|&(u, v)| f[u].min(f[v]) <= l && l < f[u].max(f[v])));
            out.1 |= lam;
        }
        out.1
    });
    out
}

fn oracle_harmonious(g: &Graph) -> bool {
    let (n, q) = (g.order(), g.size() as u32);
    let allowance = usize::from(g.is_tree());
    let mut f = vec![0u32; n];
    loop {
        let distinct: BTreeSet<u32> = f.iter().copied().collect();
        if n - distinct.len() <= allowance {
            let residues: BTreeSet<u32> = g.edges().iter().map(|&(u, v)| (f[u] + f[v]) % q).collect();
            if residues.len() == g.size() {
                return true;
            }
        }
        let mut i = 0;
        while i < n && f[i] == q - 1 {
            f[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
        f[i] += 1;
    }
}

fn oracle_sequential(g: &Graph) -> bool {
    let top = if g.is_tree() { g.size() } else { g.size() - 1 } as u32;
    let labels: Vec<u32> = (0..=top).collect();
    injections(g.order(), &labels, &mut |f| distinct_consecutive(&sums(g, f)))
}

// ---- criteria ------------------------------------------------------------

fn c1_lower_bound_witness() -> Outcome {
    for n in 4..=50 {
        let (g, f) = build_lower_bound_witness(n).map_err(|e| e.to_string())?;
        let want = n.div_ceil(2) * (n / 2 + 1);
        ensure(g.size() == want, || format!("n={n}: size {} != {want}", g.size()))?;
        let s: Vec<i64> = sum_set(&g, &f).unwrap().0.iter().map(|&x| x as i64).collect();
        ensure(gap(&s) == Ok(0), || format!("n={n}: sum gap {:?}", gap(&s)))?;
    }
    Ok("n = 4..50, size and gap 0 exact".into())
}

fn c2_kotzig() -> Outcome {
    let mut parts = Vec::new();
    for n in 7..=10 {
        let r = rho_star(n, SearchBudget::unlimited()).map_err(|e| e.to_string())?;
        let k = kotzig_lower_bound(n).unwrap();
        ensure(r >= k, || format!("rho*({n}) = {r} < {k}"))?;
        parts.push(format!("rho*({n})={r}>={k}"));
    }
    Ok(parts.join(" "))
}

fn c3_clique_certificates() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = (7..=11).map(|n| (format!("K{}-e", n + 1), k_minus_edge(n + 1))).collect();
    graphs.extend((5..=11).map(|m| (format!("K{m}"), build_complete(m).unwrap())));
    for (name, g) in graphs {
        let t = Instant::now();
        let cert = certify_infinite_deficiency(&g).ok_or_else(|| format!("{name}: no certificate"))?;
        check_infinity_certificate(&g, &cert).map_err(|e| format!("{name}: {e}"))?;
        ensure(t.elapsed() < Duration::from_secs(1), || format!("{name}: took {:?}", t.elapsed()))?;
    }
    Ok("K_{n+1}-e for n = 7..11 and K_m for m = 5..11 certified".into())
}

fn c4_threshold() -> Outcome {
    ensure(j_threshold(2) == Ok(21), || format!("j(2) = {:?}", j_threshold(2)))?;
    let graphs = enumerate_k_minus(21, 2).map_err(|e| e.to_string())?;
    for g in &graphs {
        let cert = certify_infinite_deficiency(g).ok_or_else(|| format!("{} uncertified", g6(g)))?;
        check_infinity_certificate(g, &cert)?;
    }
    Ok(format!("j(2) = 21; all {} graphs K21 minus 2 edges certified", graphs.len()))
}

fn c5_prisms() -> Outcome {
    let unlimited = SearchBudget::unlimited();
    for (n, want) in [(3, 0), (5, 0), (4, 5)] {
        let d = deficiency(&build_prism(n).unwrap(), 6, unlimited).map_err(|e| e.to_string())?;
        ensure(d.finite_value() == Some(want), || format!("D{n}: {d:?}"))?;
    }
    let d6 = build_prism(6).unwrap();
    let witness = find_sem_labeling(&d6, 12 + 7, SearchBudget::seconds(600.0));
    match witness {
        Ok(Some(f)) => {
            let cert = semlab::labeling::verify_sem(&d6, &f, 7).map_err(|e| e.to_string())?;
            check_sem_certificate(&d6, &cert)?;
            Ok("D3 = 0, D5 = 0, D4 = 5; D6 with 7 isolates has a witness".into())
        }
        Ok(None) => Err("D6 with 7 isolates has no witness".into()),
        Err(_) => {
            let alpha = find_alpha_valuation(&d6, unlimited).map_err(|e| e.to_string())?;
            ensure(alpha.is_some(), || "D6 has no alpha-valuation".into())?;
            let bound = deficiency_upper_via_alpha(&d6, unlimited).map_err(|e| e.to_string())?;
            ensure(bound == Some(7), || format!("alpha route bound {bound:?}"))?;
            Ok("D3 = 0, D5 = 0, D4 = 5; D6 search unknown, alpha route gives 7".into())
        }
    }
}

fn c6_prism_table() -> Outcome {
    for n in [8, 12] {
        let row = prism_bounds(n, None).map_err(|e| e.to_string())?;
        let old = row.old_upper.ok_or_else(|| format!("n={n}: no old upper"))?;
        ensure(row.upper < old, || format!("n={n}: {} !< {old}", row.upper))?;
    }
    Ok("9 < 11 and 13 < 17".into())
}

fn c7_trees_sem(max_n: usize) -> Outcome {
    let mut count = 0;
    for n in 2..=max_n {
        for t in enumerate_trees(n) {
            let d = deficiency(&t, 0, SearchBudget::unlimited()).map_err(|e| e.to_string())?;
            let DeficiencyResult::Finite { value: 0, witness } = d else {
                return Err(format!("{}: {d:?}", g6(&t)));
            };
            check_sem_certificate(&t, &witness)?;
            count += 1;
        }
    }
    Ok(format!("{count} trees of order 2..{max_n} have deficiency 0"))
}

fn c8_tree_strength() -> Outcome {
    let mut count = 0;
    for n in 2..=9 {
        for t in enumerate_trees(n) {
            let s = strength(&t, SearchBudget::unlimited()).map_err(|e| e.to_string())?;
            ensure(s as usize == n + 1, || format!("{}: strength {s}", g6(&t)))?;
            count += 1;
        }
    }
    Ok(format!("{count} trees of order 2..9 have strength n + 1"))
}

fn c9_trees_harmonious_sequential() -> Outcome {
    let mut count = 0;
    for n in 2..=10 {
        for t in enumerate_trees(n) {
            if find_sem_labeling(&t, n as u32, SearchBudget::unlimited()).map_err(|e| e.to_string())?.is_none() {
                continue;
            }
            let h = find_harmonious(&t, SearchBudget::unlimited()).map_err(|e| e.to_string())?;
            let f = h.ok_or_else(|| format!("{}: no harmonious labeling", g6(&t)))?;
            ensure(semlab::labeling::verify_harmonious(&t, &f) == Ok(true), || "harmonious witness fails".into())?;
            let s = find_sequential(&t, SearchBudget::unlimited()).map_err(|e| e.to_string())?;
            let f = s.ok_or_else(|| format!("{}: no sequential labeling", g6(&t)))?;
            ensure(semlab::labeling::verify_sequential(&t, &f) == Ok(true), || "sequential witness fails".into())?;
            count += 1;
        }
    }
    Ok(format!("{count} super edge-magic trees of order 2..10 are harmonious and sequential"))
}

fn c10_oracles() -> Outcome {
    const CAP: u32 = 4;
    let unlimited = SearchBudget::unlimited();
    let mut count = 0;
    for n in 1..=5 {
        for g in enumerate_graphs(n) {
            let name = g6(&g);
            let d = deficiency(&g, CAP, unlimited).map_err(|e| e.to_string())?;
            let want = oracle_deficiency(&g, CAP);
            ensure(d.finite_value() == want, || format!("{name}: deficiency {d:?}, oracle {want:?}"))?;
            if let DeficiencyResult::Finite { witness, .. } = &d {
                check_sem_certificate(&g, witness)?;
            }
            if g.size() == 0 {
                ensure(strength(&g, unlimited).is_err(), || format!("{name}: edgeless strength accepted"))?;
                ensure(find_graceful(&g, unlimited).is_err(), || format!("{name}: edgeless graceful accepted"))?;
                count += 1;
                continue;
            }
            let s = strength(&g, unlimited).map_err(|e| e.to_string())?;
            ensure(s == oracle_strength(&g), || format!("{name}: strength {s}"))?;
            let (graceful, alpha) = oracle_graceful(&g);
            let fg = find_graceful(&g, unlimited).map_err(|e| e.to_string())?;
            ensure(fg.is_some() == graceful, || format!("{name}: graceful {fg:?}, oracle {graceful}"))?;
            let fa = find_alpha_valuation(&g, unlimited).map_err(|e| e.to_string())?;
            ensure(fa.is_some() == alpha, || format!("{name}: alpha {fa:?}, oracle {alpha}"))?;
            let fh = find_harmonious(&g, unlimited).map_err(|e| e.to_string())?;
            ensure(fh.is_some() == oracle_harmonious(&g), || format!("{name}: harmonious {fh:?}"))?;
            let fs = find_sequential(&g, unlimited).map_err(|e| e.to_string())?;
            ensure(fs.is_some() == oracle_sequential(&g), || format!("{name}: sequential {fs:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} graphs of order 1..5 agree with exhaustive oracles"))
}

#[derive(Debug, Clone)]
enum SemCorruption {
    Label(usize, u32),
    Sum(usize, i64),
    S(i64),
    K(i64),
    Isolated(i64),
    Order(i64),
    DropLabel,
}

fn shift(x: u32, d: i64) -> u32 {
    (x as i64 + d).max(0) as u32
}

fn corrupt_sem(cert: &SemCertificate, c: &SemCorruption) -> Option<SemCertificate> {
    let mut bad = cert.clone();
    match *c {
        SemCorruption::Label(i, v) => {
            let i = i % bad.labels.len().max(1);
            let slot = bad.labels.get_mut(i)?;
            if *slot == v {
                return None;
            }
            *slot = v;
        }
        SemCorruption::Sum(i, d) => {
            let len = bad.sums.len();
            let slot = bad.sums.get_mut(i % len.max(1))?;
            *slot = shift(*slot, d);
        }
        SemCorruption::S(d) => bad.s = shift(bad.s, d),
        SemCorruption::K(d) => bad.k = shift(bad.k, d),
        SemCorruption::Isolated(d) => bad.isolated = shift(bad.isolated as u32, d) as usize,
        SemCorruption::Order(d) => bad.order = shift(bad.order as u32, d) as usize,
        SemCorruption::DropLabel => {
            bad.labels.pop()?;
        }
    }
    (bad != *cert).then_some(bad)
}

fn sem_corruption() -> impl Strategy<Value = SemCorruption> {
    let delta = prop_oneof![-3i64..0, 1i64..4];
    prop_oneof![
        (0usize..64, 0u32..24).prop_map(|(i, v)| SemCorruption::Label(i, v)),
        (0usize..64, delta.clone()).prop_map(|(i, d)| SemCorruption::Sum(i, d)),
        delta.clone().prop_map(SemCorruption::S),
        delta.clone().prop_map(SemCorruption::K),
        delta.clone().prop_map(SemCorruption::Isolated),
        delta.prop_map(SemCorruption::Order),
        Just(SemCorruption::DropLabel),
    ]
}

#[derive(Debug, Clone)]
enum InfCorruption {
    DuplicateVertex(usize),
    OutOfRange(usize, usize),
    M(i64),
    Q(i64),
    RaiseRho(u32),
    DropVertex,
}

fn corrupt_inf(g: &Graph, cert: &InfinityCertificate, c: &InfCorruption) -> InfinityCertificate {
    let mut bad = cert.clone();
    let m = bad.clique.len();
    match *c {
        InfCorruption::DuplicateVertex(i) => bad.clique[i % m] = bad.clique[(i + 1) % m],
        InfCorruption::OutOfRange(i, extra) => bad.clique[i % m] = g.order() + extra,
        InfCorruption::M(d) => bad.m = shift(bad.m as u32, d) as usize,
        InfCorruption::Q(d) => bad.q = shift(bad.q as u32, d) as usize,
        InfCorruption::RaiseRho(d) => bad.rho_lower += d,
        InfCorruption::DropVertex => {
            bad.clique.pop();
        }
    }
    bad
}

fn inf_corruption() -> impl Strategy<Value = InfCorruption> {
    let delta = prop_oneof![-3i64..0, 1i64..4];
    prop_oneof![
        (0usize..16).prop_map(InfCorruption::DuplicateVertex),
        (0usize..16, 0usize..4).prop_map(|(i, e)| InfCorruption::OutOfRange(i, e)),
        delta.clone().prop_map(InfCorruption::M),
        delta.prop_map(InfCorruption::Q),
        (1u32..20).prop_map(InfCorruption::RaiseRho),
        Just(InfCorruption::DropVertex),
    ]
}

fn c11_certificate_files() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut sem: Vec<(Graph, SemCertificate)> = Vec::new();
    for n in 1..=5 {
        for g in enumerate_graphs(n) {
            if let DeficiencyResult::Finite { witness, .. } = deficiency(&g, 4, SearchBudget::unlimited()).unwrap() {
                sem.push((g, witness));
            }
        }
    }
    for n in 2..=8 {
        for t in enumerate_trees(n) {
            let d = deficiency(&t, 0, SearchBudget::unlimited()).unwrap();
            if let DeficiencyResult::Finite { witness, .. } = d {
                sem.push((t, witness));
            }
        }
    }
    let d4 = build_prism(4).unwrap();
    if let DeficiencyResult::Finite { witness, .. } = deficiency(&d4, 5, SearchBudget::unlimited()).unwrap() {
        sem.push((d4, witness));
    }

    let mut inf: Vec<(Graph, InfinityCertificate)> = Vec::new();
    let mut sources: Vec<Graph> = (5..=12).map(|m| build_complete(m).unwrap()).collect();
    sources.extend((8..=12).map(k_minus_edge));
    sources.extend(enumerate_k_minus(21, 2).unwrap());
    for g in sources {
        let cert = certify_infinite_deficiency(&g).ok_or_else(|| format!("{} uncertified", g6(&g)))?;
        inf.push((g, cert));
    }

    // round trip through files, re-checked with no engine involved
    for (i, (g, cert)) in sem.iter().enumerate() {
        let path = dir.path().join(format!("sem-{i}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(cert).unwrap()).map_err(|e| e.to_string())?;
        let back: SemCertificate = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).map_err(|e| e.to_string())?;
        check_sem_certificate(g, &back).map_err(|e| format!("{}: {e}", g6(g)))?;
    }
    for (i, (g, cert)) in inf.iter().enumerate() {
        let path = dir.path().join(format!("inf-{i}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(cert).unwrap()).map_err(|e| e.to_string())?;
        let back: InfinityCertificate =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).map_err(|e| e.to_string())?;
        check_infinity_certificate(g, &back).map_err(|e| format!("{}: {e}", g6(g)))?;
    }

    let mut rejected = 0usize;
    let mut runner = TestRunner::new(Config { cases: 4000, failure_persistence: None, ..Config::default() });
    let sem_ref = &sem;
    let counter = std::cell::Cell::new(0usize);
    runner
        .run(&(0..sem_ref.len(), sem_corruption()), |(i, c)| {
            let (g, cert) = &sem_ref[i];
            if let Some(bad) = corrupt_sem(cert, &c) {
                prop_assert!(check_sem_certificate(g, &bad).is_err(), "accepted {:?} on {}", c, g6(g));
                counter.set(counter.get() + 1);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    rejected += counter.get();
    let inf_ref = &inf;
    let counter = std::cell::Cell::new(0usize);
    let mut runner = TestRunner::new(Config { cases: 4000, failure_persistence: None, ..Config::default() });
    runner
        .run(&(0..inf_ref.len(), inf_corruption()), |(i, c)| {
            let (g, cert) = &inf_ref[i];
            let bad = corrupt_inf(g, cert, &c);
            prop_assert!(check_infinity_certificate(g, &bad).is_err(), "accepted {:?} on {}", c, g6(g));
            counter.set(counter.get() + 1);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    rejected += counter.get();

    // a valid certificate presented with the wrong graph
    for (g, cert) in &inf {
        let (u, v) = (cert.clique[0], cert.clique[1]);
        let h = Graph::new(g.order(), g.edges().iter().copied().filter(|&e| e != (u, v))).unwrap();
        ensure(check_infinity_certificate(&h, cert).is_err(), || format!("{}: accepted after edge removal", g6(g)))?;
        rejected += 1;
    }
    Ok(format!("{} + {} files re-validated; {rejected} corruptions rejected", sem.len(), inf.len()))
}

fn c12_cross_consistency() -> Outcome {
    let mut certified = 0;
    let mut total = 0;
    for n in 1..=8 {
        for g in enumerate_graphs(n) {
            total += 1;
            let Some(cert) = certify_infinite_deficiency(&g) else { continue };
            check_infinity_certificate(&g, &cert)?;
            certified += 1;
            let d = deficiency_by_search(&g, 3, SearchBudget::nodes(2_000_000)).map_err(|e| e.to_string())?;
            ensure(d.finite_value().is_none(), || format!("{}: certified infinite but search found {d:?}", g6(&g)))?;
        }
    }
    Ok(format!("{total} graphs of order 1..8, {certified} certified, none with a finite witness"))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "lower-bound witness", Duration::from_secs(1), c1_lower_bound_witness),
        (2, "rho* vs n^2-5n+14 for n = 7..10", Duration::from_secs(600), c2_kotzig),
        (3, "clique certificates for K_{n+1}-e and K_m", Duration::from_secs(15), c3_clique_certificates),
        (4, "j(2) = 21 and K21 minus 2 edges", Duration::from_secs(60), c4_threshold),
        (5, "prism deficiencies", Duration::from_secs(1800), c5_prisms),
        (6, "prism table improvement", Duration::from_secs(1), c6_prism_table),
        (7, "trees of order 2..10 are super edge-magic", Duration::from_secs(600), || c7_trees_sem(10)),
        (7, "trees of order 2..12 are super edge-magic", Duration::from_secs(8 * 3600), || c7_trees_sem(12)),
        (8, "tree strength n + 1 for order 2..9", Duration::from_secs(300), c8_tree_strength),
        (9, "trees harmonious and sequential, order 2..10", Duration::from_secs(3600), c9_trees_harmonious_sequential),
        (10, "oracle equivalence, order <= 5", Duration::from_secs(600), c10_oracles),
        (11, "certificate files and corruption", Duration::from_secs(600), c11_certificate_files),
        (12, "no finite witness for certified graphs, order <= 8", Duration::from_secs(3600), c12_cross_consistency),
    ];
    let mut failures = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {id:>2}: {name} ({detail}) [{elapsed:.2?}]"),
            Err(reason) => {
                failures += 1;
                println!("FAIL criterion {id:>2}: {name}: {reason} [{elapsed:.2?}]");
            }
        }
        std::io::stdout().flush().unwrap();
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}

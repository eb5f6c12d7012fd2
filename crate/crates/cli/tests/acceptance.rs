//! Acceptance criteria, one line each. Run with
//! `cargo test -p zham-cli --test acceptance`.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zham_core::solvers::{
    find_hamiltonian_cycle, find_hamiltonian_cycle_bipartite, has_perfect_matching, max_matching,
    strongly_connected,
};
use zham_core::verifier::{
    self, bipartite_from_index, digraph_from_index, load, reverify, ClaimId, CounterexampleStore,
    SuiteConfig, SuiteReport,
};
use zham_core::{
    ham_cycle_pullback, matching_pushforward, parse_instance, unzmap, zmap, BipartiteGraph, Budget,
    CycleFactor, Digraph, Instance,
};

type Check = Result<String, String>;
type Criterion<'a> = (u32, &'static str, Duration, Box<dyn Fn() -> Check + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_digraphs(n: usize) -> impl Iterator<Item = (u64, Digraph)> {
    (0..1u64 << (n * (n - 1))).map(move |i| (i, digraph_from_index(n, i)))
}

fn suite(claims: &[ClaimId], n_min: usize, n_max: usize) -> Result<SuiteReport, String> {
    let cfg = SuiteConfig::exhaustive(claims.to_vec(), n_min, n_max);
    verifier::run_suite(&cfg, None).map_err(|e| e.to_string())
}

fn no_counterexamples(report: &SuiteReport) -> Result<(), String> {
    for v in &report.verdicts {
        ensure(v.counterexample_count == 0, || {
            format!("{}: {} counterexamples", v.claim_id, v.counterexample_count)
        })?;
        ensure(v.exhausted_budget == 0, || {
            format!("{}: budget exhausted", v.claim_id)
        })?;
    }
    Ok(())
}

fn round_trip() -> Check {
    let mut count = 0;
    for n in [3, 4] {
        for (i, d) in all_digraphs(n) {
            let back = unzmap(&zmap(&d)).map_err(|e| format!("n={n} index={i}: {e}"))?;
            ensure(back == d, || format!("n={n} index={i}: round trip differs"))?;
            count += 1;
        }
    }
    ensure(count == 4160, || format!("{count} digraphs"))?;
    Ok(format!("{count} digraphs, 0 failures"))
}

fn degree_transport() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for t in 0..1000 {
        let n = rng.random_range(1..=8);
        let slots = n * (n - 1);
        let d = digraph_from_index(n, rng.random::<u64>() & ((1u64 << slots) - 1));
        let g = zmap(&d);
        ensure(g.edge_count() == d.arc_count(), || {
            format!("sample {t}: |E| != |A|")
        })?;
        for i in 1..=n {
            ensure(
                g.x_degree(i) == d.out_degree(i) && g.y_degree(i) == d.in_degree(i),
                || format!("sample {t}: degree mismatch at {i}"),
            )?;
        }
    }
    Ok("1000 digraphs, 0 failures".into())
}

fn thm_gz() -> Check {
    let mut hamiltonian = 0;
    for n in [3, 4] {
        for (i, d) in all_digraphs(n) {
            if let Some(cycle) = find_hamiltonian_cycle(&d, Budget::default()).into_witness() {
                hamiltonian += 1;
                let g = zmap(&d);
                ensure(has_perfect_matching(&g), || {
                    format!("n={n} index={i}: no perfect matching")
                })?;
                let m = matching_pushforward(&d, &cycle).map_err(|e| e.to_string())?;
                ensure(m.is_perfect_in(&g), || {
                    format!("n={n} index={i}: pushforward not perfect")
                })?;
            }
        }
    }
    let report = suite(&[ClaimId::ThmGz], 3, 4)?;
    no_counterexamples(&report)?;
    let v = &report.verdicts[0];
    ensure(v.instances_scanned == 4160, || {
        format!("{} scanned", v.instances_scanned)
    })?;
    ensure(v.hypothesis_hits == hamiltonian, || {
        "hit count differs from direct sweep".into()
    })?;
    Ok(format!(
        "4160 digraphs, {hamiltonian} Hamiltonian, 0 counterexamples"
    ))
}

fn pullback_regularity() -> Check {
    let mut checked = 0;
    for n in 1..=4 {
        for (i, d) in all_digraphs(n) {
            let g = zmap(&d);
            let Some(w) = find_hamiltonian_cycle_bipartite(&g, Budget::default()).into_witness()
            else {
                continue;
            };
            let p = ham_cycle_pullback(&g, &w).map_err(|e| format!("n={n} index={i}: {e}"))?;
            for half in p.halves() {
                let ok = CycleFactor::from_arcs(n, half).is_some_and(|f| f.is_derangement());
                ensure(ok, || {
                    format!("n={n} index={i}: half {half:?} is not a derangement")
                })?;
            }
            checked += 1;
        }
    }
    let report = suite(&[ClaimId::ThmZgPullback], 1, 4)?;
    no_counterexamples(&report)?;
    ensure(report.verdicts[0].hypothesis_hits == checked, || {
        "hit count differs".into()
    })?;
    Ok(format!(
        "{checked} digraphs with Z(D) Hamiltonian, 0 failures"
    ))
}

/// Hypothesis by the bipartite solver, conclusion by the digraph solver.
fn thm_zg_holds_against(instance: &str) -> Result<(), String> {
    let Ok(Instance::Digraph(d)) = parse_instance(instance) else {
        return Err("stored instance is not a digraph".into());
    };
    ensure(strongly_connected(&d), || {
        "stored digraph is not strong".into()
    })?;
    let z = find_hamiltonian_cycle_bipartite(&zmap(&d), Budget::default());
    ensure(z.found(), || "Z(D) is not Hamiltonian".into())?;
    let h = find_hamiltonian_cycle(&d, Budget::default());
    ensure(h.decided() == Some(false), || "D is Hamiltonian".into())
}

fn thm_zg(dir: &Path) -> Check {
    let path = dir.join("thm-zg.jsonl");
    let mut store = CounterexampleStore::open(&path).map_err(|e| e.to_string())?;
    let exhaustive = SuiteConfig::exhaustive(vec![ClaimId::ThmZg], 1, 4);
    let random = SuiteConfig::random(vec![ClaimId::ThmZg], 5, 5, 100_000, 42);
    let mut summary = Vec::new();
    let mut total = 0;
    for cfg in [exhaustive, random] {
        let report = verifier::run_suite(&cfg, Some(&mut store)).map_err(|e| e.to_string())?;
        let v = &report.verdicts[0];
        ensure(
            v.hypothesis_hits == v.passes + v.counterexample_count + v.exhausted_budget,
            || "count conservation".into(),
        )?;
        total += v.counterexample_count;
        summary.push(format!(
            "{} scanned, {} hits, {} counterexamples",
            v.instances_scanned, v.hypothesis_hits, v.counterexample_count
        ));
    }
    drop(store);
    let records = load(&path).map_err(|e| e.to_string())?;
    ensure(records.len() as u64 == total, || {
        "store size differs from verdicts".into()
    })?;
    for r in &records {
        ensure(
            reverify(r, Budget::default()).map_err(|e| e.to_string())?,
            || format!("record does not re-verify: {}", r.instance),
        )?;
        thm_zg_holds_against(&r.instance)?;
    }
    Ok(format!(
        "n<=4: {}; n=5 random: {}; all {} stored counterexamples re-verify",
        summary[0],
        summary[1],
        records.len()
    ))
}

fn established() -> Check {
    let digraph = suite(&[ClaimId::Ghouila, ClaimId::Woodall], 1, 4)?;
    let bipartite = suite(&[ClaimId::MoonMoserHalf, ClaimId::LasVergnas], 1, 3)?;
    let graph = suite(&[ClaimId::Dirac], 1, 7)?;
    let mut parts = Vec::new();
    for report in [&digraph, &bipartite, &graph] {
        no_counterexamples(report)?;
        ensure(!report.has_failures(), || "established claim failed".into())?;
        for v in &report.verdicts {
            parts.push(format!(
                "{} {}/{}",
                v.claim_id, v.hypothesis_hits, v.instances_scanned
            ));
        }
    }
    Ok(format!(
        "0 counterexamples (hits/scanned: {})",
        parts.join(", ")
    ))
}

fn brute_max_matching(g: &BipartiteGraph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << edges.len())
        .filter_map(|subset| {
            let chosen: Vec<_> = (0..edges.len())
                .filter(|k| subset >> k & 1 == 1)
                .map(|k| edges[k])
                .collect();
            let mut xs: Vec<_> = chosen.iter().map(|e| e.0).collect();
            let mut ys: Vec<_> = chosen.iter().map(|e| e.1).collect();
            xs.sort_unstable();
            xs.dedup();
            ys.sort_unstable();
            ys.dedup();
            (xs.len() == chosen.len() && ys.len() == chosen.len()).then_some(chosen.len())
        })
        .max()
        .unwrap_or(0)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn brute_hamiltonian(d: &Digraph) -> bool {
    let n = d.order();
    if n < 2 {
        return false;
    }
    let mut rest: Vec<usize> = (2..=n).collect();
    loop {
        let cycle: Vec<usize> = std::iter::once(1).chain(rest.iter().copied()).collect();
        if (0..n).all(|k| d.has_arc(cycle[k], cycle[(k + 1) % n])) {
            return true;
        }
        if !next_permutation(&mut rest) {
            return false;
        }
    }
}

fn oracle_equivalence() -> Check {
    for i in 0..512 {
        let g = bipartite_from_index(3, i);
        let got = max_matching(&g).len();
        let want = brute_max_matching(&g);
        ensure(got == want, || {
            format!("bipartite index {i}: {got} != {want}")
        })?;
    }
    let mut digraphs = 0;
    for n in 1..=4 {
        for (i, d) in all_digraphs(n) {
            let got = find_hamiltonian_cycle(&d, Budget::default()).decided();
            ensure(got == Some(brute_hamiltonian(&d)), || {
                format!("n={n} index={i}: disagreement")
            })?;
            digraphs += 1;
        }
    }
    Ok(format!(
        "512 bipartite graphs and {digraphs} digraphs agree"
    ))
}

fn adjudicated(dir: &Path) -> Check {
    let claims = [
        ClaimId::MoonMoserK,
        ClaimId::FaudreeDigraph,
        ClaimId::Faudree,
        ClaimId::Cor1,
        ClaimId::Cor2,
        ClaimId::Cor3a,
        ClaimId::Cor3b,
    ];
    let cfg = SuiteConfig::exhaustive(claims.to_vec(), 1, 4);
    let mut texts = Vec::new();
    let mut stored = 0;
    for run in 0..2 {
        let path = dir.join(format!("adjudicated-{run}.jsonl"));
        let mut store = CounterexampleStore::open(&path).map_err(|e| e.to_string())?;
        let report = verifier::run_suite(&cfg, Some(&mut store)).map_err(|e| e.to_string())?;
        drop(store);
        texts.push(serde_json::to_string(&report).unwrap());
        let records = load(&path).map_err(|e| e.to_string())?;
        for r in &records {
            ensure(
                reverify(r, Budget::default()).map_err(|e| e.to_string())?,
                || format!("{} record does not re-verify: {}", r.claim_id, r.instance),
            )?;
        }
        stored = records.len();
        if run == 0 {
            let counts: Vec<String> = report
                .verdicts
                .iter()
                .map(|v| format!("{} {}", v.claim_id, v.counterexample_count))
                .collect();
            texts.push(counts.join(", "));
        }
    }
    ensure(texts[0] == texts[2], || {
        "reports differ between runs".into()
    })?;
    Ok(format!(
        "two runs byte-identical; {stored} stored counterexamples re-verify (counterexamples: {})",
        texts[1]
    ))
}

fn cli_determinism(dir: &Path) -> Check {
    let run = |tag: &str| -> Result<(String, String), String> {
        let report = dir.join(format!("random-{tag}.json"));
        let out = Command::new(env!("CARGO_BIN_EXE_zham"))
            .args([
                "verify", "--mode", "random", "--seed", "42", "--format", "json", "--report",
            ])
            .arg(&report)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!(
                "exit {:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            )
        })?;
        let file = std::fs::read_to_string(&report).map_err(|e| e.to_string())?;
        Ok((String::from_utf8_lossy(&out.stdout).into_owned(), file))
    };
    let a = run("a")?;
    let b = run("b")?;
    ensure(a == b, || "reports differ".into())?;
    ensure(a.0 == a.1, || "stdout and report file differ".into())?;
    Ok(format!("identical {}-byte reports", a.1.len()))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "round-trip bijection",
            Duration::from_secs(5),
            Box::new(round_trip),
        ),
        (
            2,
            "degree transport",
            Duration::from_secs(5),
            Box::new(degree_transport),
        ),
        (3, "thm-gz sweep", Duration::from_secs(30), Box::new(thm_gz)),
        (
            4,
            "pullback regularity",
            Duration::from_secs(60),
            Box::new(pullback_regularity),
        ),
        (
            5,
            "thm-zg adjudication",
            Duration::from_secs(600),
            Box::new(|| thm_zg(dir.path())),
        ),
        (
            6,
            "established sweeps",
            Duration::from_secs(600),
            Box::new(established),
        ),
        (
            7,
            "oracle equivalence",
            Duration::from_secs(60),
            Box::new(oracle_equivalence),
        ),
        (
            8,
            "adjudicated reports",
            Duration::from_secs(600),
            Box::new(|| adjudicated(dir.path())),
        ),
        (
            9,
            "cli determinism",
            Duration::from_secs(600),
            Box::new(|| cli_determinism(dir.path())),
        ),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in &criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|msg| {
            if elapsed <= *limit {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}; {msg}"))
            }
        });
        match result {
            Ok(msg) => println!("criterion {id} PASS {name} ({elapsed:.2?} / {limit:?}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id} FAIL {name} ({elapsed:.2?} / {limit:?}): {msg}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};
use zham_core::conditions::{self, ConditionId, Domain, OreThreshold};
use zham_core::solvers::{self, Outcome, SolveResult};
use zham_core::verifier::{self, ClaimId, CounterexampleStore, Mode, SuiteConfig};
use zham_core::{
    ham_cycle_pullback, matching_pushforward, parse_instance, unzmap as unzmap_graph,
    zmap as zmap_graph, BipartiteGraph, Budget, CycleFactor, CycleWitness, Digraph, Instance,
};

use crate::error::CliError;
use crate::{dot, Format, ModeArg, VerifyArgs};

fn read_input(path: &Path) -> Result<Instance, CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        fs::read_to_string(path).map_err(io_err)?
    };
    Ok(parse_instance(&text)?)
}

fn write_text(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn print_json(value: &impl Serialize) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    write_text(None, &text)
}

fn digraph(instance: Instance) -> Result<Digraph, CliError> {
    match instance {
        Instance::Digraph(d) => Ok(d),
        other => Err(CliError::Invalid(format!(
            "expected a digraph (`D n`), got a {}",
            other.kind_name()
        ))),
    }
}

fn bipartite(instance: Instance) -> Result<BipartiteGraph, CliError> {
    match instance {
        Instance::Bipartite(g) => Ok(g),
        other => Err(CliError::Invalid(format!(
            "expected a bipartite graph (`B n`), got a {}",
            other.kind_name()
        ))),
    }
}

/// Emits `found` plus the rendered witness; budget exhaustion still prints
/// its JSON before failing with exit code 4.
fn emit_search<W>(
    result: SolveResult<W>,
    key: &str,
    render: impl FnOnce(W) -> Value,
) -> Result<(), CliError> {
    let nodes = result.nodes_explored;
    let (found, witness) = match result.outcome {
        Outcome::Found(w) => (json!(true), render(w)),
        Outcome::NotFound => (json!(false), Value::Null),
        Outcome::BudgetExhausted => (Value::Null, Value::Null),
    };
    let exhausted = found.is_null();
    print_json(&json!({
        "found": found,
        key: witness,
        "budget_exhausted": exhausted,
        "nodes_explored": nodes,
    }))?;
    if exhausted {
        Err(CliError::BudgetExhausted(nodes))
    } else {
        Ok(())
    }
}

fn labels(g: &BipartiteGraph, w: &CycleWitness) -> Value {
    json!(w.sequence.iter().map(|&v| g.label(v)).collect::<Vec<_>>())
}

pub fn zmap(
    input: &Path,
    output: Option<PathBuf>,
    dot_path: Option<PathBuf>,
) -> Result<(), CliError> {
    let g = zmap_graph(&digraph(read_input(input)?)?);
    write_text(output.as_deref(), &g.to_edge_list())?;
    if let Some(p) = dot_path {
        write_text(Some(&p), &dot::render(&g))?;
    }
    Ok(())
}

pub fn unzmap(input: &Path, output: Option<PathBuf>) -> Result<(), CliError> {
    let d = unzmap_graph(&bipartite(read_input(input)?)?)?;
    write_text(output.as_deref(), &d.to_edge_list())
}

pub fn ham(input: &Path, budget: Budget) -> Result<(), CliError> {
    match read_input(input)? {
        Instance::Digraph(d) => {
            emit_search(solvers::find_hamiltonian_cycle(&d, budget), "cycle", |w| {
                json!(w.sequence)
            })
        }
        Instance::Graph(g) => emit_search(
            solvers::find_hamiltonian_cycle_graph(&g, budget),
            "cycle",
            |w| json!(w.sequence),
        ),
        Instance::Bipartite(g) => bipham_on(&g, budget),
    }
}

fn bipham_on(g: &BipartiteGraph, budget: Budget) -> Result<(), CliError> {
    emit_search(
        solvers::find_hamiltonian_cycle_bipartite(g, budget),
        "cycle",
        |w| labels(g, &w),
    )
}

pub fn bipham(input: &Path, budget: Budget) -> Result<(), CliError> {
    bipham_on(&bipartite(read_input(input)?)?, budget)
}

pub fn matching(input: &Path) -> Result<(), CliError> {
    let g = bipartite(read_input(input)?)?;
    let m = solvers::max_matching(&g);
    print_json(&json!({
        "size": m.len(),
        "perfect": m.is_perfect_in(&g),
        "matching": m.pairs(),
    }))
}

pub fn pm2(input: &Path, budget: Budget) -> Result<(), CliError> {
    let g = bipartite(read_input(input)?)?;
    let result = solvers::find_two_disjoint_perfect_matchings(&g, budget);
    emit_search(result, "matchings", |(a, b)| json!([a.pairs(), b.pairs()]))
}

pub fn conditions(input: &Path, id: Option<String>, k: Option<usize>) -> Result<(), CliError> {
    let instance = read_input(input)?;
    let id = id
        .map(|s| s.parse::<ConditionId>().map_err(CliError::Usage))
        .transpose()?;
    if k.is_some() && !matches!(id, None | Some(ConditionId::MoonMoserK)) {
        return Err(CliError::Usage(
            "--k only applies to --id moon-moser-k".into(),
        ));
    }
    let reports = match (id, &instance) {
        (None, Instance::Graph(g)) => conditions::graph_reports(g),
        (None, Instance::Digraph(d)) => conditions::digraph_reports(d),
        (None, Instance::Bipartite(g)) => match k {
            Some(k) => vec![conditions::moon_moser_k(g, k)?],
            None => conditions::bipartite_reports(g),
        },
        (Some(id), _) => vec![single_condition(id, &instance, k)?],
    };
    print_json(&json!({ "reports": reports }))
}

fn single_condition(
    id: ConditionId,
    instance: &Instance,
    k: Option<usize>,
) -> Result<conditions::ConditionReport, CliError> {
    let report = match (id, instance) {
        (ConditionId::Dirac, Instance::Graph(g)) => conditions::dirac(g),
        (ConditionId::Faudree, Instance::Graph(g)) => conditions::faudree(g),
        (ConditionId::GhouilaHouri, Instance::Digraph(d)) => conditions::ghouila_houri(d),
        (ConditionId::FaudreeDigraph, Instance::Digraph(d)) => conditions::faudree_digraph(d),
        (ConditionId::DisjointHcDegree, Instance::Digraph(d)) => conditions::disjoint_hc_degree(d),
        (ConditionId::Woodall, Instance::Digraph(d)) => conditions::woodall(d),
        (ConditionId::WoodallPlus2, Instance::Digraph(d)) => conditions::woodall_plus2(d),
        (ConditionId::MoonMoserK, Instance::Bipartite(g)) => {
            let k = k.ok_or_else(|| CliError::Usage("moon-moser-k needs --k".into()))?;
            conditions::moon_moser_k(g, k)?
        }
        (ConditionId::MoonMoserHalf, Instance::Bipartite(g)) => conditions::moon_moser_half(g),
        (ConditionId::LasVergnas, Instance::Bipartite(g)) => conditions::las_vergnas(g),
        (ConditionId::OrePerfectMatching, Instance::Bipartite(g)) => {
            conditions::ore_bipartite(g, OreThreshold::N)
        }
        (ConditionId::OreTwoPerfectMatchings, Instance::Bipartite(g)) => {
            conditions::ore_bipartite(g, OreThreshold::NPlus2)
        }
        (id, other) => {
            let wanted = match id.domain() {
                Domain::Graph => "graph",
                Domain::Digraph => "digraph",
                Domain::Bipartite => "bipartite graph",
            };
            return Err(CliError::Invalid(format!(
                "{id} applies to a {wanted}, got a {}",
                other.kind_name()
            )));
        }
    };
    Ok(report)
}

fn parse_list<T>(text: &str, item: impl Fn(&str) -> Option<T>) -> Result<Vec<T>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| item(s).ok_or_else(|| CliError::Usage(format!("bad cycle entry `{s}`"))))
        .collect()
}

fn factor_json(n: usize, arcs: &[(usize, usize)]) -> Value {
    let factor = CycleFactor::from_arcs(n, arcs);
    json!({
        "arcs": arcs,
        "derangement": factor.as_ref().is_some_and(CycleFactor::is_derangement),
        "single_cycle": factor.as_ref().is_some_and(CycleFactor::is_single_cycle),
        "cycles": factor.map(|f| f.cycles()),
    })
}

pub fn pullback(input: &Path, cycle: &str) -> Result<(), CliError> {
    let g = match read_input(input)? {
        Instance::Digraph(d) => zmap_graph(&d),
        other => bipartite(other)?,
    };
    let seq = parse_list(cycle, |s| g.parse_label(s))?;
    let p = ham_cycle_pullback(&g, &CycleWitness::undirected(seq))?;
    let n = g.part_size();
    print_json(&json!({
        "odd": factor_json(n, &p.odd),
        "even": factor_json(n, &p.even),
    }))
}

pub fn pushforward(input: &Path, cycle: &str) -> Result<(), CliError> {
    let d = digraph(read_input(input)?)?;
    let seq = parse_list(cycle, |s| s.parse::<usize>().ok())?;
    let m = matching_pushforward(&d, &CycleWitness::directed(seq))?;
    print_json(&json!({
        "matching": m.pairs(),
        "perfect": m.is_perfect_in(&zmap_graph(&d)),
    }))
}

pub fn verify(args: VerifyArgs, budget: Budget) -> Result<(), CliError> {
    let claims = if args.claims.is_empty() {
        ClaimId::ALL.to_vec()
    } else {
        args.claims
            .iter()
            .map(|s| s.parse::<ClaimId>())
            .collect::<Result<_, _>>()?
    };
    let mode = match args.mode {
        ModeArg::Exhaustive => {
            if args.samples.is_some() || args.seed.is_some() {
                return Err(CliError::Usage(
                    "--samples and --seed only apply with --mode random".into(),
                ));
            }
            Mode::Exhaustive
        }
        ModeArg::Random => Mode::Random {
            samples: args.samples.unwrap_or(10_000),
            seed: args.seed.unwrap_or(0),
        },
    };
    let cfg = SuiteConfig {
        claims,
        n_min: args.n_min.unwrap_or(args.n_max),
        n_max: args.n_max,
        mode,
        budget,
        limits: Default::default(),
    };
    let mut store = args
        .store
        .as_deref()
        .map(CounterexampleStore::open)
        .transpose()?;
    let report = verifier::run_suite(&cfg, store.as_mut())?;

    let json_text = serde_json::to_string_pretty(&report).expect("plain data serializes") + "\n";
    if let Some(p) = &args.report {
        write_text(Some(p), &json_text)?;
    }
    match args.format {
        Format::Table => write_text(None, &report.to_table())?,
        Format::Json => write_text(None, &json_text)?,
    }
    let failed: Vec<&str> = report
        .verdicts
        .iter()
        .filter(|v| v.is_failure())
        .map(|v| v.claim_id.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::EstablishedFailure(failed.join(", ")))
    }
}

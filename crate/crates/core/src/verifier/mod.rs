//! Sweeps that test each claim's hypothesis ⇒ conclusion over every labeled
//! instance of a given order, or over a seeded random sample.
//!
//! Instances are checked in parallel. Tallies are sums and counterexamples
//! are sorted by `(n, instance index)`, so a report depends only on its
//! configuration.

mod claims;
mod enumerate;
mod store;

use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

pub use claims::{check_claim, ClaimId, ClaimOutcome};
pub use enumerate::{
    bipartite_from_index, digraph_from_index, enumerate_bipartite, enumerate_digraphs,
    enumerate_graphs, graph_from_index, slot_count, EnumerationLimits,
};
pub use store::{load, CounterexampleRecord, CounterexampleStore, StoreError};

use crate::cycle::{is_hamiltonian_cycle, CycleWitness};
use crate::format::{parse_instance, Instance, ParseError};
use crate::solvers::Budget;
use crate::zmap::zmap;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    Digraph,
    Bipartite,
    Graph,
}

impl InstanceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InstanceKind::Digraph => "digraph",
            InstanceKind::Bipartite => "bipartite",
            InstanceKind::Graph => "graph",
        }
    }

    pub(crate) fn stream_tag(self) -> u64 {
        match self {
            InstanceKind::Digraph => 1,
            InstanceKind::Bipartite => 2,
            InstanceKind::Graph => 3,
        }
    }

    /// Instance number `index` of order `n`.
    pub fn instance(self, n: usize, index: u64) -> Instance {
        match self {
            InstanceKind::Digraph => Instance::Digraph(digraph_from_index(n, index)),
            InstanceKind::Bipartite => Instance::Bipartite(bipartite_from_index(n, index)),
            InstanceKind::Graph => Instance::Graph(graph_from_index(n, index)),
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("{kind} order {n} outside 1..={max}")]
    OrderAboveLimit {
        kind: InstanceKind,
        n: usize,
        max: usize,
    },
    #[error("claim {claim} needs a {expected} instance, got {found}")]
    KindMismatch {
        claim: ClaimId,
        expected: InstanceKind,
        found: &'static str,
    },
    #[error("empty order range {n_min}..={n_max}")]
    EmptyRange { n_min: usize, n_max: usize },
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("stored instance: {0}")]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    /// `samples` instances per order, drawn from a stream fixed by
    /// `(seed, instance kind, n)`.
    Random {
        samples: u64,
        seed: u64,
    },
}

impl Mode {
    pub fn seed(&self) -> Option<u64> {
        match *self {
            Mode::Exhaustive => None,
            Mode::Random { seed, .. } => Some(seed),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub claims: Vec<ClaimId>,
    pub n_min: usize,
    pub n_max: usize,
    pub mode: Mode,
    pub budget: Budget,
    pub limits: EnumerationLimits,
}

impl SuiteConfig {
    pub fn exhaustive(claims: Vec<ClaimId>, n_min: usize, n_max: usize) -> Self {
        Self {
            claims,
            n_min,
            n_max,
            mode: Mode::Exhaustive,
            budget: Budget::default(),
            limits: EnumerationLimits::default(),
        }
    }

    pub fn random(
        claims: Vec<ClaimId>,
        n_min: usize,
        n_max: usize,
        samples: u64,
        seed: u64,
    ) -> Self {
        Self {
            mode: Mode::Random { samples, seed },
            ..Self::exhaustive(claims, n_min, n_max)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub claim_id: ClaimId,
    pub n: usize,
    /// Position in the enumeration order of its kind and order.
    pub index: u64,
    pub instance: String,
    pub details: Value,
}

/// Counts for one order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderTally {
    pub n: usize,
    pub instances_scanned: u64,
    pub hypothesis_hits: u64,
    pub passes: u64,
    pub counterexamples: u64,
    pub exhausted_budget: u64,
}

impl OrderTally {
    fn add(&mut self, other: &OrderTally) {
        self.instances_scanned += other.instances_scanned;
        self.hypothesis_hits += other.hypothesis_hits;
        self.passes += other.passes;
        self.counterexamples += other.counterexamples;
        self.exhausted_budget += other.exhausted_budget;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim_id: ClaimId,
    pub statement: String,
    pub established: bool,
    pub instance_kind: InstanceKind,
    pub instances_scanned: u64,
    pub hypothesis_hits: u64,
    pub passes: u64,
    pub counterexample_count: u64,
    pub exhausted_budget: u64,
    pub per_n: Vec<OrderTally>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ClaimVerdict {
    /// An established claim with a counterexample: a defect in this crate.
    pub fn is_failure(&self) -> bool {
        self.established && self.counterexample_count > 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub tool_version: String,
    pub mode: Mode,
    pub n_min: usize,
    pub n_max: usize,
    pub budget: Budget,
    pub verdicts: Vec<ClaimVerdict>,
}

impl SuiteReport {
    pub fn has_failures(&self) -> bool {
        self.verdicts.iter().any(ClaimVerdict::is_failure)
    }

    pub fn to_table(&self) -> String {
        let header = [
            "claim", "kind", "status", "scanned", "hyp", "pass", "cex", "exhaust",
        ];
        let rows: Vec<[String; 8]> = self
            .verdicts
            .iter()
            .map(|v| {
                [
                    v.claim_id.to_string(),
                    v.instance_kind.to_string(),
                    if v.established {
                        "established"
                    } else {
                        "adjudicated"
                    }
                    .to_string(),
                    v.instances_scanned.to_string(),
                    v.hypothesis_hits.to_string(),
                    v.passes.to_string(),
                    v.counterexample_count.to_string(),
                    v.exhausted_budget.to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let mut line = |cells: &[&str]| {
            let mut s = String::new();
            for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
                if i > 2 {
                    let _ = write!(s, "{cell:>w$}  ");
                } else {
                    let _ = write!(s, "{cell:<w$}  ");
                }
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(&header);
        for row in &rows {
            line(&row.each_ref().map(String::as_str));
        }
        let _ = write!(
            out,
            "mode {} n {}..={} budget {}",
            match self.mode {
                Mode::Exhaustive => "exhaustive".to_string(),
                Mode::Random { samples, seed } => format!("random samples={samples} seed={seed}"),
            },
            self.n_min,
            self.n_max,
            self.budget.0
        );
        out.push('\n');
        out
    }
}

#[derive(Default)]
struct Partial {
    tally: OrderTally,
    found: Vec<(u64, Value)>,
}

impl Partial {
    fn merge(mut self, mut other: Partial) -> Partial {
        self.tally.add(&other.tally);
        self.found.append(&mut other.found);
        self
    }
}

fn sweep_order(
    claim: ClaimId,
    n: usize,
    indices: impl ParallelIterator<Item = u64>,
    budget: Budget,
) -> Partial {
    let kind = claim.instance_kind();
    let mut partial = indices
        .fold(Partial::default, |mut acc, index| {
            let instance = kind.instance(n, index);
            let outcome = check_claim(claim, &instance, budget)
                .expect("enumerated instances match the claim's kind");
            acc.tally.instances_scanned += 1;
            match outcome {
                ClaimOutcome::HypothesisMiss => {}
                ClaimOutcome::Pass => {
                    acc.tally.hypothesis_hits += 1;
                    acc.tally.passes += 1;
                }
                ClaimOutcome::Counterexample(details) => {
                    acc.tally.hypothesis_hits += 1;
                    acc.tally.counterexamples += 1;
                    acc.found.push((index, details));
                }
                // Undecided hypotheses are counted as hits so that
                // hits = passes + counterexamples + exhausted always holds.
                ClaimOutcome::BudgetExhausted => {
                    acc.tally.hypothesis_hits += 1;
                    acc.tally.exhausted_budget += 1;
                }
            }
            acc
        })
        .reduce(Partial::default, Partial::merge);
    partial.tally.n = n;
    partial.found.sort_by_key(|&(index, _)| index);
    partial
}

fn run_claim(claim: ClaimId, cfg: &SuiteConfig) -> Result<ClaimVerdict, VerifyError> {
    let kind = claim.instance_kind();
    let mut per_n = Vec::new();
    let mut counterexamples = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        let partial = match cfg.mode {
            Mode::Exhaustive => {
                let range = enumerate::exhaustive_range(kind, n, &cfg.limits)?;
                sweep_order(claim, n, range.into_par_iter(), cfg.budget)
            }
            Mode::Random { samples, seed } => {
                let indices = enumerate::random_indices(kind, n, samples, seed)?;
                sweep_order(claim, n, indices.into_par_iter(), cfg.budget)
            }
        };
        counterexamples.extend(
            partial
                .found
                .into_iter()
                .map(|(index, details)| Counterexample {
                    claim_id: claim,
                    n,
                    index,
                    instance: kind.instance(n, index).to_edge_list(),
                    details,
                }),
        );
        per_n.push(partial.tally);
    }
    let mut total = OrderTally::default();
    per_n.iter().for_each(|t| total.add(t));
    Ok(ClaimVerdict {
        claim_id: claim,
        statement: claim.statement().to_string(),
        established: claim.is_established(),
        instance_kind: kind,
        instances_scanned: total.instances_scanned,
        hypothesis_hits: total.hypothesis_hits,
        passes: total.passes,
        counterexample_count: total.counterexamples,
        exhausted_budget: total.exhausted_budget,
        per_n,
        counterexamples,
        note: claim.disjointness_note().map(str::to_string),
    })
}

/// Runs every configured claim over `n_min..=n_max` and appends any
/// counterexamples to `store`. Orders outside an enumerator's limit are an
/// error, not silently skipped.
pub fn run_suite(
    cfg: &SuiteConfig,
    store: Option<&mut CounterexampleStore>,
) -> Result<SuiteReport, VerifyError> {
    if cfg.n_min == 0 || cfg.n_min > cfg.n_max {
        return Err(VerifyError::EmptyRange {
            n_min: cfg.n_min,
            n_max: cfg.n_max,
        });
    }
    let verdicts = cfg
        .claims
        .iter()
        .map(|&claim| run_claim(claim, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(store) = store {
        for cx in verdicts.iter().flat_map(|v| &v.counterexamples) {
            store.append(&CounterexampleRecord {
                claim_id: cx.claim_id,
                n: cx.n,
                instance: cx.instance.clone(),
                details: cx.details.clone(),
                tool_version: TOOL_VERSION.to_string(),
                rng_seed: cfg.mode.seed(),
            })?;
        }
        store.flush()?;
    }
    Ok(SuiteReport {
        tool_version: TOOL_VERSION.to_string(),
        mode: cfg.mode,
        n_min: cfg.n_min,
        n_max: cfg.n_max,
        budget: cfg.budget,
        verdicts,
    })
}

/// Re-checks a stored counterexample with fresh solver runs. True when the
/// hypothesis still holds and the conclusion still fails; for claims that
/// store a Hamiltonian cycle of `Z(D)`, that cycle must also be valid.
pub fn reverify(record: &CounterexampleRecord, budget: Budget) -> Result<bool, VerifyError> {
    let instance = parse_instance(&record.instance)?;
    if instance.order() != record.n {
        return Ok(false);
    }
    if let (Instance::Digraph(d), Some(labels)) = (&instance, record.details.get("z_cycle")) {
        let g = zmap(d);
        let sequence: Option<Vec<usize>> = labels.as_array().and_then(|a| {
            a.iter()
                .map(|l| l.as_str().and_then(|s| g.parse_label(s)))
                .collect()
        });
        let valid =
            sequence.is_some_and(|seq| is_hamiltonian_cycle(&g, &CycleWitness::undirected(seq)));
        if !valid {
            return Ok(false);
        }
    }
    let outcome = check_claim(record.claim_id, &instance, budget)?;
    Ok(matches!(outcome, ClaimOutcome::Counterexample(_)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm_gz_counts_at_four() {
        let cfg = SuiteConfig::exhaustive(vec![ClaimId::ThmGz], 4, 4);
        let report = run_suite(&cfg, None).unwrap();
        let v = &report.verdicts[0];
        assert_eq!(v.instances_scanned, 4096);
        assert_eq!(v.counterexample_count, 0);
        assert_eq!(v.hypothesis_hits, v.passes);
    }

    #[test]
    fn small_suite_is_conservative_and_clean() {
        let cfg = SuiteConfig::exhaustive(ClaimId::ALL.to_vec(), 1, 3);
        let report = run_suite(&cfg, None).unwrap();
        for v in &report.verdicts {
            assert_eq!(
                v.hypothesis_hits,
                v.passes + v.counterexample_count + v.exhausted_budget,
                "{}",
                v.claim_id
            );
            assert_eq!(v.counterexample_count as usize, v.counterexamples.len());
            assert!(!v.is_failure(), "{}", v.claim_id);
        }
    }

    #[test]
    fn bad_ranges_are_rejected() {
        let cfg = SuiteConfig::exhaustive(vec![ClaimId::Ghouila], 3, 2);
        assert!(matches!(
            run_suite(&cfg, None),
            Err(VerifyError::EmptyRange { .. })
        ));
        let cfg = SuiteConfig::exhaustive(vec![ClaimId::Ghouila], 6, 6);
        assert!(matches!(
            run_suite(&cfg, None),
            Err(VerifyError::OrderAboveLimit { .. })
        ));
    }

    #[test]
    fn table_has_a_row_per_claim() {
        let cfg = SuiteConfig::exhaustive(vec![ClaimId::Ghouila, ClaimId::FaudreeDigraph], 3, 3);
        let table = run_suite(&cfg, None).unwrap().to_table();
        assert_eq!(table.lines().count(), 4);
        assert!(table.lines().nth(1).unwrap().starts_with("ghouila"));
    }
}

//! Claim registry: each claim pairs a hypothesis with a solver-backed
//! conclusion on one kind of instance.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{InstanceKind, VerifyError};
use crate::conditions::{self, ConditionReport, OreThreshold};
use crate::cycle::CycleWitness;
use crate::format::Instance;
use crate::graph::{BipartiteGraph, Digraph, Graph};
use crate::solvers::{self, Budget, Outcome};
use crate::zmap::{ham_cycle_pullback, matching_pushforward, zmap, CycleFactor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    /// `D` strong and `Z(D)` Hamiltonian ⇒ `D` Hamiltonian.
    #[serde(rename = "thm-zg")]
    ThmZg,
    /// `D` Hamiltonian ⇒ `Z(D)` has a perfect matching.
    #[serde(rename = "thm-gz")]
    ThmGz,
    /// `Z(D)` Hamiltonian ⇒ both alternating halves pull back to cycle factors.
    #[serde(rename = "thm-zg-pullback")]
    ThmZgPullback,
    #[serde(rename = "dirac")]
    Dirac,
    #[serde(rename = "ghouila")]
    Ghouila,
    #[serde(rename = "faudree")]
    Faudree,
    #[serde(rename = "faudree-digraph")]
    FaudreeDigraph,
    #[serde(rename = "mm-k")]
    MoonMoserK,
    #[serde(rename = "mm-half")]
    MoonMoserHalf,
    #[serde(rename = "cor1")]
    Cor1,
    #[serde(rename = "lv")]
    LasVergnas,
    #[serde(rename = "woodall")]
    Woodall,
    #[serde(rename = "cor2")]
    Cor2,
    #[serde(rename = "cor3a")]
    Cor3a,
    #[serde(rename = "cor3b")]
    Cor3b,
}

impl ClaimId {
    pub const ALL: [ClaimId; 15] = [
        ClaimId::ThmZg,
        ClaimId::ThmGz,
        ClaimId::ThmZgPullback,
        ClaimId::Dirac,
        ClaimId::Ghouila,
        ClaimId::Faudree,
        ClaimId::FaudreeDigraph,
        ClaimId::MoonMoserK,
        ClaimId::MoonMoserHalf,
        ClaimId::Cor1,
        ClaimId::LasVergnas,
        ClaimId::Woodall,
        ClaimId::Cor2,
        ClaimId::Cor3a,
        ClaimId::Cor3b,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::ThmZg => "thm-zg",
            ClaimId::ThmGz => "thm-gz",
            ClaimId::ThmZgPullback => "thm-zg-pullback",
            ClaimId::Dirac => "dirac",
            ClaimId::Ghouila => "ghouila",
            ClaimId::Faudree => "faudree",
            ClaimId::FaudreeDigraph => "faudree-digraph",
            ClaimId::MoonMoserK => "mm-k",
            ClaimId::MoonMoserHalf => "mm-half",
            ClaimId::Cor1 => "cor1",
            ClaimId::LasVergnas => "lv",
            ClaimId::Woodall => "woodall",
            ClaimId::Cor2 => "cor2",
            ClaimId::Cor3a => "cor3a",
            ClaimId::Cor3b => "cor3b",
        }
    }

    pub fn instance_kind(self) -> InstanceKind {
        match self {
            ClaimId::ThmZg
            | ClaimId::ThmGz
            | ClaimId::ThmZgPullback
            | ClaimId::Ghouila
            | ClaimId::FaudreeDigraph
            | ClaimId::Cor1
            | ClaimId::Woodall
            | ClaimId::Cor2 => InstanceKind::Digraph,
            ClaimId::MoonMoserK
            | ClaimId::MoonMoserHalf
            | ClaimId::LasVergnas
            | ClaimId::Cor3a
            | ClaimId::Cor3b => InstanceKind::Bipartite,
            ClaimId::Dirac | ClaimId::Faudree => InstanceKind::Graph,
        }
    }

    /// Established results: a counterexample means a bug in this crate.
    /// Everything else is adjudicated and counterexamples are ordinary output.
    pub fn is_established(self) -> bool {
        matches!(
            self,
            ClaimId::ThmGz
                | ClaimId::ThmZgPullback
                | ClaimId::Dirac
                | ClaimId::Ghouila
                | ClaimId::MoonMoserHalf
                | ClaimId::LasVergnas
                | ClaimId::Woodall
        )
    }

    pub fn statement(self) -> &'static str {
        match self {
            ClaimId::ThmZg => "D strong and Z(D) Hamiltonian => D Hamiltonian",
            ClaimId::ThmGz => "D Hamiltonian => Z(D) has a perfect matching (the pushed-forward cycle)",
            ClaimId::ThmZgPullback => {
                "Z(D) Hamiltonian => both alternating halves pull back to fixed-point-free permutations"
            }
            ClaimId::Dirac => "n > 2, d(u) >= n/2 for all u => G Hamiltonian",
            ClaimId::Ghouila => "n > 2, D strong, d(u) >= n for all u => D Hamiltonian",
            ClaimId::Faudree => "n > 2, |{v : d(v) < n/2}| <= k - 1 => G Hamiltonian",
            ClaimId::FaudreeDigraph => "n > 2, D strong, |{v : d(v) < n}| <= k - 1 => D Hamiltonian",
            ClaimId::MoonMoserK => "1 < k < n, |{v : d(v) < k}| < n for some k => G Hamiltonian",
            ClaimId::MoonMoserHalf => "2n > 2, d(u) > n/2 for all u => G Hamiltonian",
            ClaimId::Cor1 => "n > 2, D strong, d+(u) > n/2 and d-(u) > n/2 => two arc-disjoint Hamiltonian cycles",
            ClaimId::LasVergnas => {
                "2n > 2, d(u) + d(v) >= n + 2 for non-adjacent u in X, v in Y => every perfect matching lies on a Hamiltonian cycle"
            }
            ClaimId::Woodall => "n > 2, D strong, d+(u) + d-(v) >= n for every non-arc <u,v> => D Hamiltonian",
            ClaimId::Cor2 => "n > 2, d+(u) + d-(v) >= n + 2 for every non-arc <u,v> => two arc-disjoint Hamiltonian cycles",
            ClaimId::Cor3a => "2n > 2, d(u) + d(v) >= n for cross non-edges => perfect matching",
            ClaimId::Cor3b => "2n > 2, d(u) + d(v) >= n + 2 for cross non-edges => two edge-disjoint perfect matchings",
        }
    }

    /// Set for claims whose conclusion depends on reading "disjoint" as
    /// arc-/edge-disjoint.
    pub fn disjointness_note(self) -> Option<&'static str> {
        match self {
            ClaimId::Cor1 | ClaimId::Cor2 => Some("disjoint read as arc-disjoint"),
            ClaimId::Cor3b => Some("disjoint read as edge-disjoint"),
            _ => None,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == lower)
            .ok_or_else(|| VerifyError::UnknownClaim(s.to_owned()))
    }
}

/// Result of testing one claim on one instance.
#[derive(Debug, Clone, PartialEq)]
pub enum ClaimOutcome {
    HypothesisMiss,
    Pass,
    /// Hypothesis holds and the conclusion is false; the payload carries
    /// enough data to re-check the failure independently.
    Counterexample(Value),
    /// Some solver ran out of budget before the outcome was decided.
    BudgetExhausted,
}

fn labels(g: &BipartiteGraph, w: &CycleWitness) -> Vec<String> {
    w.sequence.iter().map(|&v| g.label(v)).collect()
}

fn degrees_json(d: &Digraph) -> Value {
    json!(d
        .degrees()
        .iter()
        .map(|x| [x.out_degree, x.in_degree])
        .collect::<Vec<_>>())
}

fn factor_json(n: usize, arcs: &[(usize, usize)]) -> Value {
    match CycleFactor::from_arcs(n, arcs) {
        Some(f) => json!({
            "arcs": arcs,
            "cycles": f.cycles(),
            "derangement": f.is_derangement(),
        }),
        None => json!({ "arcs": arcs, "cycles": null, "derangement": false }),
    }
}

macro_rules! decided {
    ($result:expr) => {
        match $result.outcome {
            Outcome::Found(w) => Some(w),
            Outcome::NotFound => None,
            Outcome::BudgetExhausted => return ClaimOutcome::BudgetExhausted,
        }
    };
}

fn hypothesis_then<F>(report: ConditionReport, conclusion: F) -> ClaimOutcome
where
    F: FnOnce(&ConditionReport) -> ClaimOutcome,
{
    if report.hypothesis_holds {
        conclusion(&report)
    } else {
        ClaimOutcome::HypothesisMiss
    }
}

fn digraph_hamiltonian(d: &Digraph, report: &ConditionReport, budget: Budget) -> ClaimOutcome {
    match decided!(solvers::find_hamiltonian_cycle(d, budget)) {
        Some(_) => ClaimOutcome::Pass,
        None => ClaimOutcome::Counterexample(json!({
            "hypothesis": report,
            "degrees": degrees_json(d),
            "conclusion": "no directed Hamiltonian cycle",
        })),
    }
}

fn digraph_two_cycles(d: &Digraph, report: &ConditionReport, budget: Budget) -> ClaimOutcome {
    match decided!(solvers::find_two_disjoint_hamiltonian_cycles(d, budget)) {
        Some(_) => ClaimOutcome::Pass,
        None => {
            let one = solvers::find_hamiltonian_cycle(d, budget).into_witness();
            ClaimOutcome::Counterexample(json!({
                "hypothesis": report,
                "degrees": degrees_json(d),
                "hamiltonian_cycle": one.map(|w| w.sequence),
                "conclusion": "no two arc-disjoint Hamiltonian cycles",
            }))
        }
    }
}

fn bipartite_hamiltonian(g: &BipartiteGraph, report: Value, budget: Budget) -> ClaimOutcome {
    match decided!(solvers::find_hamiltonian_cycle_bipartite(g, budget)) {
        Some(_) => ClaimOutcome::Pass,
        None => ClaimOutcome::Counterexample(json!({
            "hypothesis": report,
            "conclusion": "no Hamiltonian cycle",
        })),
    }
}

fn graph_hamiltonian(g: &Graph, report: &ConditionReport, budget: Budget) -> ClaimOutcome {
    match decided!(solvers::find_hamiltonian_cycle_graph(g, budget)) {
        Some(_) => ClaimOutcome::Pass,
        None => ClaimOutcome::Counterexample(json!({
            "hypothesis": report,
            "degrees": (1..=g.order()).map(|v| g.degree(v)).collect::<Vec<_>>(),
            "conclusion": "no Hamiltonian cycle",
        })),
    }
}

fn thm_zg(d: &Digraph, budget: Budget) -> ClaimOutcome {
    if !solvers::strongly_connected(d) {
        return ClaimOutcome::HypothesisMiss;
    }
    let g = zmap(d);
    let Some(z_cycle) = decided!(solvers::find_hamiltonian_cycle_bipartite(&g, budget)) else {
        return ClaimOutcome::HypothesisMiss;
    };
    match decided!(solvers::find_hamiltonian_cycle(d, budget)) {
        Some(_) => ClaimOutcome::Pass,
        None => {
            let n = d.order();
            let pullback = ham_cycle_pullback(&g, &z_cycle).ok();
            ClaimOutcome::Counterexample(json!({
                "z_cycle": labels(&g, &z_cycle),
                "pullback": pullback.map(|p| json!({
                    "odd": factor_json(n, &p.odd),
                    "even": factor_json(n, &p.even),
                })),
                "degrees": degrees_json(d),
                "conclusion": "no directed Hamiltonian cycle",
            }))
        }
    }
}

fn thm_gz(d: &Digraph, budget: Budget) -> ClaimOutcome {
    let Some(cycle) = decided!(solvers::find_hamiltonian_cycle(d, budget)) else {
        return ClaimOutcome::HypothesisMiss;
    };
    let g = zmap(d);
    let has_pm = solvers::has_perfect_matching(&g);
    let pushed = matching_pushforward(d, &cycle);
    let pushed_perfect = pushed.as_ref().is_ok_and(|m| m.is_perfect_in(&g));
    if has_pm && pushed_perfect {
        ClaimOutcome::Pass
    } else {
        ClaimOutcome::Counterexample(json!({
            "cycle": cycle.sequence,
            "has_perfect_matching": has_pm,
            "pushforward": pushed.ok().map(|m| m.pairs().to_vec()),
            "pushforward_perfect": pushed_perfect,
        }))
    }
}

fn thm_zg_pullback(d: &Digraph, budget: Budget) -> ClaimOutcome {
    let g = zmap(d);
    let Some(z_cycle) = decided!(solvers::find_hamiltonian_cycle_bipartite(&g, budget)) else {
        return ClaimOutcome::HypothesisMiss;
    };
    let n = d.order();
    let ok = match ham_cycle_pullback(&g, &z_cycle) {
        Ok(p) => p
            .halves()
            .iter()
            .all(|half| CycleFactor::from_arcs(n, half).is_some_and(|f| f.is_derangement())),
        Err(_) => false,
    };
    if ok {
        ClaimOutcome::Pass
    } else {
        let p = ham_cycle_pullback(&g, &z_cycle);
        ClaimOutcome::Counterexample(json!({
            "z_cycle": labels(&g, &z_cycle),
            "pullback": p.as_ref().ok().map(|p| json!({
                "odd": factor_json(n, &p.odd),
                "even": factor_json(n, &p.even),
            })),
            "error": p.err().map(|e| e.to_string()),
        }))
    }
}

fn moon_moser_k_claim(g: &BipartiteGraph, budget: Budget) -> ClaimOutcome {
    let n = g.part_size();
    let holding: Vec<ConditionReport> = (2..n)
        .filter_map(|k| conditions::moon_moser_k(g, k).ok())
        .filter(|r| r.hypothesis_holds)
        .collect();
    if holding.is_empty() {
        return ClaimOutcome::HypothesisMiss;
    }
    bipartite_hamiltonian(g, json!(holding), budget)
}

fn las_vergnas_claim(g: &BipartiteGraph, budget: Budget) -> ClaimOutcome {
    hypothesis_then(conditions::las_vergnas(g), |report| {
        let Some(all) = decided!(solvers::perfect_matchings(g, budget)) else {
            unreachable!("perfect matching enumeration always reports Found when decided")
        };
        for m in &all {
            let r = match solvers::extends_to_hamiltonian(g, m, budget) {
                Ok(r) => r,
                Err(e) => unreachable!("enumerated matchings are perfect: {e}"),
            };
            if decided!(r).is_none() {
                return ClaimOutcome::Counterexample(json!({
                    "hypothesis": report,
                    "matching": m.pairs(),
                    "conclusion": "perfect matching lies on no Hamiltonian cycle",
                }));
            }
        }
        ClaimOutcome::Pass
    })
}

/// Tests `claim` on `instance`: a counterexample iff the hypothesis holds and
/// the conclusion is decided false within `budget`.
pub fn check_claim(
    claim: ClaimId,
    instance: &Instance,
    budget: Budget,
) -> Result<ClaimOutcome, VerifyError> {
    let mismatch = || VerifyError::KindMismatch {
        claim,
        expected: claim.instance_kind(),
        found: instance.kind_name(),
    };
    let outcome = match (claim, instance) {
        (ClaimId::ThmZg, Instance::Digraph(d)) => thm_zg(d, budget),
        (ClaimId::ThmGz, Instance::Digraph(d)) => thm_gz(d, budget),
        (ClaimId::ThmZgPullback, Instance::Digraph(d)) => thm_zg_pullback(d, budget),
        (ClaimId::Ghouila, Instance::Digraph(d)) => {
            hypothesis_then(conditions::ghouila_houri(d), |r| {
                digraph_hamiltonian(d, r, budget)
            })
        }
        (ClaimId::FaudreeDigraph, Instance::Digraph(d)) => hypothesis_then(conditions::faudree_digraph(d), |r| {
            digraph_hamiltonian(d, r, budget)
        }),
        (ClaimId::Woodall, Instance::Digraph(d)) => hypothesis_then(conditions::woodall(d), |r| {
            digraph_hamiltonian(d, r, budget)
        }),
        (ClaimId::Cor1, Instance::Digraph(d)) => {
            hypothesis_then(conditions::disjoint_hc_degree(d), |r| {
                digraph_two_cycles(d, r, budget)
            })
        }
        (ClaimId::Cor2, Instance::Digraph(d)) => {
            hypothesis_then(conditions::woodall_plus2(d), |r| {
                digraph_two_cycles(d, r, budget)
            })
        }
        (ClaimId::MoonMoserK, Instance::Bipartite(g)) => moon_moser_k_claim(g, budget),
        (ClaimId::MoonMoserHalf, Instance::Bipartite(g)) => {
            hypothesis_then(conditions::moon_moser_half(g), |r| {
                bipartite_hamiltonian(g, json!(r), budget)
            })
        }
        (ClaimId::LasVergnas, Instance::Bipartite(g)) => las_vergnas_claim(g, budget),
        (ClaimId::Cor3a, Instance::Bipartite(g)) => {
            hypothesis_then(conditions::ore_bipartite(g, OreThreshold::N), |r| {
                if solvers::has_perfect_matching(g) {
                    ClaimOutcome::Pass
                } else {
                    ClaimOutcome::Counterexample(json!({
                        "hypothesis": r,
                        "max_matching": solvers::max_matching(g).pairs(),
                        "conclusion": "no perfect matching",
                    }))
                }
            })
        }
        (ClaimId::Cor3b, Instance::Bipartite(g)) => hypothesis_then(
            conditions::ore_bipartite(g, OreThreshold::NPlus2),
            |r| match decided!(solvers::find_two_disjoint_perfect_matchings(g, budget)) {
                Some(_) => ClaimOutcome::Pass,
                None => ClaimOutcome::Counterexample(json!({
                    "hypothesis": r,
                    "max_matching": solvers::max_matching(g).pairs(),
                    "conclusion": "no two edge-disjoint perfect matchings",
                })),
            },
        ),
        (ClaimId::Dirac, Instance::Graph(g)) => {
            hypothesis_then(conditions::dirac(g), |r| graph_hamiltonian(g, r, budget))
        }
        (ClaimId::Faudree, Instance::Graph(g)) => {
            hypothesis_then(conditions::faudree(g), |r| graph_hamiltonian(g, r, budget))
        }
        _ => return Err(mismatch()),
    };
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digraph(d: Digraph) -> Instance {
        Instance::Digraph(d)
    }

    #[test]
    fn thm_gz_on_triangle_passes() {
        let c3 = digraph(Digraph::directed_cycle(3).unwrap());
        assert_eq!(
            check_claim(ClaimId::ThmGz, &c3, Budget::default()).unwrap(),
            ClaimOutcome::Pass
        );
    }

    #[test]
    fn ghouila_on_triangle_misses() {
        let c3 = digraph(Digraph::directed_cycle(3).unwrap());
        assert_eq!(
            check_claim(ClaimId::Ghouila, &c3, Budget::default()).unwrap(),
            ClaimOutcome::HypothesisMiss
        );
    }

    #[test]
    fn kind_mismatch_is_an_error() {
        let g = Instance::Bipartite(BipartiteGraph::complete(2).unwrap());
        assert!(matches!(
            check_claim(ClaimId::ThmZg, &g, Budget::default()),
            Err(VerifyError::KindMismatch { .. })
        ));
    }

    #[test]
    fn claim_ids_parse_case_insensitively() {
        for c in ClaimId::ALL {
            assert_eq!(c.as_str().to_uppercase().parse::<ClaimId>().unwrap(), c);
        }
        assert!("nope".parse::<ClaimId>().is_err());
    }

    #[test]
    fn tiny_budget_is_reported() {
        let k6 = digraph(Digraph::complete(6).unwrap());
        assert_eq!(
            check_claim(ClaimId::Ghouila, &k6, Budget(2)).unwrap(),
            ClaimOutcome::BudgetExhausted
        );
    }
}

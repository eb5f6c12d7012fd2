//! Degree-based sufficient conditions for Hamiltonicity and for (disjoint)
//! perfect matchings, implemented as hypothesis checks only.
//!
//! Each predicate answers whether its hypothesis holds on a given graph and
//! lists what violates it. Conclusions are never assumed here; the verifier
//! tests them against the exact solvers. Thresholds of the form `n/2` are
//! compared as `2·d` against `n`, so there is no floating point anywhere.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{BipartiteGraph, Digraph, Graph, Side};
use crate::solvers::strongly_connected;

/// Stable condition identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConditionId {
    #[serde(rename = "dirac")]
    Dirac,
    #[serde(rename = "ghouila-houri")]
    GhouilaHouri,
    #[serde(rename = "faudree")]
    Faudree,
    #[serde(rename = "faudree-digraph")]
    FaudreeDigraph,
    #[serde(rename = "moon-moser-k")]
    MoonMoserK,
    #[serde(rename = "moon-moser-half")]
    MoonMoserHalf,
    #[serde(rename = "cor1-disjoint-hc")]
    DisjointHcDegree,
    #[serde(rename = "las-vergnas")]
    LasVergnas,
    #[serde(rename = "woodall")]
    Woodall,
    #[serde(rename = "cor2-woodall-plus2")]
    WoodallPlus2,
    #[serde(rename = "cor3-ore-pm")]
    OrePerfectMatching,
    #[serde(rename = "cor3-ore-2pm")]
    OreTwoPerfectMatchings,
}

/// What kind of graph a condition is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Graph,
    Digraph,
    Bipartite,
}

impl ConditionId {
    pub const ALL: [ConditionId; 12] = [
        ConditionId::Dirac,
        ConditionId::GhouilaHouri,
        ConditionId::Faudree,
        ConditionId::FaudreeDigraph,
        ConditionId::MoonMoserK,
        ConditionId::MoonMoserHalf,
        ConditionId::DisjointHcDegree,
        ConditionId::LasVergnas,
        ConditionId::Woodall,
        ConditionId::WoodallPlus2,
        ConditionId::OrePerfectMatching,
        ConditionId::OreTwoPerfectMatchings,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConditionId::Dirac => "dirac",
            ConditionId::GhouilaHouri => "ghouila-houri",
            ConditionId::Faudree => "faudree",
            ConditionId::FaudreeDigraph => "faudree-digraph",
            ConditionId::MoonMoserK => "moon-moser-k",
            ConditionId::MoonMoserHalf => "moon-moser-half",
            ConditionId::DisjointHcDegree => "cor1-disjoint-hc",
            ConditionId::LasVergnas => "las-vergnas",
            ConditionId::Woodall => "woodall",
            ConditionId::WoodallPlus2 => "cor2-woodall-plus2",
            ConditionId::OrePerfectMatching => "cor3-ore-pm",
            ConditionId::OreTwoPerfectMatchings => "cor3-ore-2pm",
        }
    }

    pub fn domain(self) -> Domain {
        match self {
            ConditionId::Dirac | ConditionId::Faudree => Domain::Graph,
            ConditionId::GhouilaHouri
            | ConditionId::FaudreeDigraph
            | ConditionId::DisjointHcDegree
            | ConditionId::Woodall
            | ConditionId::WoodallPlus2 => Domain::Digraph,
            ConditionId::MoonMoserK
            | ConditionId::MoonMoserHalf
            | ConditionId::LasVergnas
            | ConditionId::OrePerfectMatching
            | ConditionId::OreTwoPerfectMatchings => Domain::Bipartite,
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ConditionId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConditionId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown condition id `{s}`"))
    }
}

/// One reason a hypothesis fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// The statement needs more vertices (`n` is the header order).
    TooFewVertices {
        n: usize,
        required: usize,
    },
    NotStronglyConnected,
    /// A vertex whose degree misses a per-vertex bound.
    Vertex {
        vertex: String,
        degree: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        out_degree: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        in_degree: Option<usize>,
    },
    /// A non-adjacent pair whose degree sum misses the threshold.
    Pair {
        u: String,
        v: String,
        degree_sum: usize,
        threshold: usize,
    },
    /// The low-degree set `S` is too large.
    LowDegreeSet {
        members: Vec<String>,
        size: usize,
        bound: usize,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub n: usize,
    /// Minimum degree (both Faudree forms) or the caller's `k` (Moon–Moser k-form).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// `|S|` for the low-degree-set conditions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition_id: ConditionId,
    pub hypothesis_holds: bool,
    pub violating_items: Vec<Violation>,
    pub parameters: Parameters,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ConditionReport {
    fn new(
        condition_id: ConditionId,
        parameters: Parameters,
        violating_items: Vec<Violation>,
    ) -> Self {
        Self {
            condition_id,
            hypothesis_holds: violating_items.is_empty(),
            violating_items,
            parameters,
            note: None,
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_owned());
        self
    }
}

fn min_order(n: usize, required: usize, out: &mut Vec<Violation>) {
    if n < required {
        out.push(Violation::TooFewVertices { n, required });
    }
}

fn strong(d: &Digraph, out: &mut Vec<Violation>) {
    if !strongly_connected(d) {
        out.push(Violation::NotStronglyConnected);
    }
}

fn plain_vertex(v: usize, degree: usize) -> Violation {
    Violation::Vertex {
        vertex: v.to_string(),
        degree,
        out_degree: None,
        in_degree: None,
    }
}

fn digraph_vertex(d: &Digraph, v: usize) -> Violation {
    Violation::Vertex {
        vertex: v.to_string(),
        degree: d.degree(v),
        out_degree: Some(d.out_degree(v)),
        in_degree: Some(d.in_degree(v)),
    }
}

fn side_label(side: Side, i: usize) -> String {
    match side {
        Side::X => format!("x{i}"),
        Side::Y => format!("y{i}"),
    }
}

fn bipartite_vertices(g: &BipartiteGraph) -> impl Iterator<Item = (Side, usize)> + '_ {
    let n = g.part_size();
    (1..=n)
        .map(|i| (Side::X, i))
        .chain((1..=n).map(|i| (Side::Y, i)))
}

/// `n > 2` and `d(u) ≥ n/2` for every vertex.
pub fn dirac(g: &Graph) -> ConditionReport {
    let n = g.order();
    let mut v = Vec::new();
    min_order(n, 3, &mut v);
    v.extend(
        (1..=n)
            .filter(|&u| 2 * g.degree(u) < n)
            .map(|u| plain_vertex(u, g.degree(u))),
    );
    ConditionReport::new(
        ConditionId::Dirac,
        Parameters {
            n,
            ..Default::default()
        },
        v,
    )
}

/// `n > 2`, `D` strong, and `d(u) = d⁺(u) + d⁻(u) ≥ n` for every vertex.
pub fn ghouila_houri(d: &Digraph) -> ConditionReport {
    let n = d.order();
    let mut v = Vec::new();
    min_order(n, 3, &mut v);
    strong(d, &mut v);
    v.extend(
        (1..=n)
            .filter(|&u| d.degree(u) < n)
            .map(|u| digraph_vertex(d, u)),
    );
    ConditionReport::new(
        ConditionId::GhouilaHouri,
        Parameters {
            n,
            ..Default::default()
        },
        v,
    )
}

/// `n > 2` and `|S| ≤ k − 1` where `S = {v : d(v) < n/2}` and `k` is the
/// minimum degree.
pub fn faudree(g: &Graph) -> ConditionReport {
    let n = g.order();
    let k = g.min_degree();
    let s: Vec<usize> = (1..=n).filter(|&u| 2 * g.degree(u) < n).collect();
    let mut v = Vec::new();
    min_order(n, 3, &mut v);
    if s.len() + 1 > k {
        v.push(Violation::LowDegreeSet {
            members: s.iter().map(ToString::to_string).collect(),
            size: s.len(),
            bound: k.saturating_sub(1),
        });
    }
    let params = Parameters {
        n,
        k: Some(k),
        s_size: Some(s.len()),
        threshold: None,
    };
    ConditionReport::new(ConditionId::Faudree, params, v)
}

/// `n > 2`, `D` strong and `|S| ≤ k − 1` where `S = {v : d(v) < n}` and
/// `k = min d(v)`.
pub fn faudree_digraph(d: &Digraph) -> ConditionReport {
    let n = d.order();
    let k = (1..=n).map(|u| d.degree(u)).min().unwrap_or(0);
    let s: Vec<usize> = (1..=n).filter(|&u| d.degree(u) < n).collect();
    let mut v = Vec::new();
    min_order(n, 3, &mut v);
    strong(d, &mut v);
    if s.len() + 1 > k {
        v.push(Violation::LowDegreeSet {
            members: s.iter().map(ToString::to_string).collect(),
            size: s.len(),
            bound: k.saturating_sub(1),
        });
    }
    let params = Parameters {
        n,
        k: Some(k),
        s_size: Some(s.len()),
        threshold: None,
    };
    ConditionReport::new(ConditionId::FaudreeDigraph, params, v)
}

/// Fewer than `n` vertices (drawn from both parts) have degree below `k`;
/// `k` must satisfy `1 < k < n`.
pub fn moon_moser_k(g: &BipartiteGraph, k: usize) -> Result<ConditionReport, GraphError> {
    let n = g.part_size();
    if k <= 1 || k >= n {
        return Err(GraphError::ParameterOutOfRange { k, n });
    }
    let s: Vec<String> = bipartite_vertices(g)
        .filter(|&(side, i)| g.degree(side, i) < k)
        .map(|(side, i)| side_label(side, i))
        .collect();
    let mut v = Vec::new();
    if s.len() >= n {
        v.push(Violation::LowDegreeSet {
            size: s.len(),
            bound: n - 1,
            members: s.clone(),
        });
    }
    let params = Parameters {
        n,
        k: Some(k),
        s_size: Some(s.len()),
        threshold: None,
    };
    Ok(ConditionReport::new(ConditionId::MoonMoserK, params, v)
        .with_note("S counts low-degree vertices from both parts"))
}

/// `2n > 2` and `d(u) > n/2` for every vertex of both parts.
pub fn moon_moser_half(g: &BipartiteGraph) -> ConditionReport {
    let n = g.part_size();
    let mut v = Vec::new();
    min_order(n, 2, &mut v);
    v.extend(
        bipartite_vertices(g)
            .filter(|&(side, i)| 2 * g.degree(side, i) <= n)
            .map(|(side, i)| Violation::Vertex {
                vertex: side_label(side, i),
                degree: g.degree(side, i),
                out_degree: None,
                in_degree: None,
            }),
    );
    ConditionReport::new(
        ConditionId::MoonMoserHalf,
        Parameters {
            n,
            ..Default::default()
        },
        v,
    )
}

/// `n > 2`, `D` strong, and `d⁺(u) > n/2`, `d⁻(u) > n/2` for every vertex.
pub fn disjoint_hc_degree(d: &Digraph) -> ConditionReport {
    let n = d.order();
    let mut v = Vec::new();
    min_order(n, 3, &mut v);
    strong(d, &mut v);
    v.extend(
        (1..=n)
            .filter(|&u| 2 * d.out_degree(u) <= n || 2 * d.in_degree(u) <= n)
            .map(|u| digraph_vertex(d, u)),
    );
    ConditionReport::new(
        ConditionId::DisjointHcDegree,
        Parameters {
            n,
            ..Default::default()
        },
        v,
    )
}

fn cross_pairs(g: &BipartiteGraph, threshold: usize) -> Vec<Violation> {
    let n = g.part_size();
    let mut out = Vec::new();
    for x in 1..=n {
        for y in 1..=n {
            if !g.has_edge(x, y) {
                let sum = g.x_degree(x) + g.y_degree(y);
                if sum < threshold {
                    out.push(Violation::Pair {
                        u: side_label(Side::X, x),
                        v: side_label(Side::Y, y),
                        degree_sum: sum,
                        threshold,
                    });
                }
            }
        }
    }
    out
}

fn bipartite_ore(g: &BipartiteGraph, id: ConditionId, threshold: usize) -> ConditionReport {
    let n = g.part_size();
    let mut v = Vec::new();
    min_order(n, 2, &mut v);
    v.extend(cross_pairs(g, threshold));
    let params = Parameters {
        n,
        threshold: Some(threshold),
        ..Default::default()
    };
    ConditionReport::new(id, params, v)
}

/// `2n > 2` and `d(u) + d(v) ≥ n + 2` for every non-adjacent `u ∈ X`, `v ∈ Y`.
pub fn las_vergnas(g: &BipartiteGraph) -> ConditionReport {
    bipartite_ore(g, ConditionId::LasVergnas, g.part_size() + 2)
}

/// Which degree-sum threshold [`ore_bipartite`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OreThreshold {
    /// `n`: stated to force a perfect matching.
    N,
    /// `n + 2`: stated to force two edge-disjoint perfect matchings.
    NPlus2,
}

/// `2n > 2` and `d(u) + d(v) ≥ threshold` for every cross-part non-edge.
pub fn ore_bipartite(g: &BipartiteGraph, threshold: OreThreshold) -> ConditionReport {
    let n = g.part_size();
    match threshold {
        OreThreshold::N => bipartite_ore(g, ConditionId::OrePerfectMatching, n),
        OreThreshold::NPlus2 => bipartite_ore(g, ConditionId::OreTwoPerfectMatchings, n + 2),
    }
}

fn woodall_like(
    d: &Digraph,
    id: ConditionId,
    threshold: usize,
    needs_strong: bool,
) -> ConditionReport {
    let n = d.order();
    let mut v = Vec::new();
    min_order(n, 3, &mut v);
    if needs_strong {
        strong(d, &mut v);
    }
    for a in 1..=n {
        for b in 1..=n {
            if a != b && !d.has_arc(a, b) {
                let sum = d.out_degree(a) + d.in_degree(b);
                if sum < threshold {
                    v.push(Violation::Pair {
                        u: a.to_string(),
                        v: b.to_string(),
                        degree_sum: sum,
                        threshold,
                    });
                }
            }
        }
    }
    let params = Parameters {
        n,
        threshold: Some(threshold),
        ..Default::default()
    };
    ConditionReport::new(id, params, v)
}

/// `n > 2`, `D` strong and `d⁺(u) + d⁻(v) ≥ n` for every ordered non-arc `<u, v>`.
pub fn woodall(d: &Digraph) -> ConditionReport {
    woodall_like(d, ConditionId::Woodall, d.order(), true)
}

/// `n > 2` and `d⁺(u) + d⁻(v) ≥ n + 2` for every ordered non-arc `<u, v>`.
/// Strong connectivity is not part of this statement; for `n > 2` the degree
/// bound already forces it.
pub fn woodall_plus2(d: &Digraph) -> ConditionReport {
    woodall_like(d, ConditionId::WoodallPlus2, d.order() + 2, false)
}

/// All conditions stated for plain graphs.
pub fn graph_reports(g: &Graph) -> Vec<ConditionReport> {
    vec![dirac(g), faudree(g)]
}

/// All conditions stated for digraphs.
pub fn digraph_reports(d: &Digraph) -> Vec<ConditionReport> {
    vec![
        ghouila_houri(d),
        faudree_digraph(d),
        disjoint_hc_degree(d),
        woodall(d),
        woodall_plus2(d),
    ]
}

/// All conditions stated for balanced bipartite graphs, with Moon–Moser's
/// k-form evaluated at every admissible `k`.
pub fn bipartite_reports(g: &BipartiteGraph) -> Vec<ConditionReport> {
    let n = g.part_size();
    let mut out: Vec<ConditionReport> = (2..n).filter_map(|k| moon_moser_k(g, k).ok()).collect();
    out.extend([
        moon_moser_half(g),
        las_vergnas(g),
        ore_bipartite(g, OreThreshold::N),
        ore_bipartite(g, OreThreshold::NPlus2),
    ]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmap::zmap;

    fn path4() -> Graph {
        Graph::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap()
    }

    fn cycle4() -> Graph {
        Graph::new(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    fn star3() -> Graph {
        Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn dirac_examples() {
        assert!(dirac(&Graph::complete(4).unwrap()).hypothesis_holds);
        let r = dirac(&path4());
        assert!(!r.hypothesis_holds);
        assert_eq!(r.violating_items.len(), 2);
        assert!(dirac(&cycle4()).hypothesis_holds);
        let small = dirac(&Graph::complete(2).unwrap());
        assert_eq!(
            small.violating_items,
            vec![Violation::TooFewVertices { n: 2, required: 3 }]
        );
    }

    #[test]
    fn ghouila_houri_examples() {
        assert!(ghouila_houri(&Digraph::complete(3).unwrap()).hypothesis_holds);
        assert!(!ghouila_houri(&Digraph::directed_cycle(3).unwrap()).hypothesis_holds);
        // strong, n = 4, vertex 4 has d = 3
        let d = Digraph::new(
            4,
            [
                (1, 2),
                (2, 1),
                (1, 3),
                (3, 1),
                (2, 3),
                (3, 2),
                (3, 4),
                (4, 1),
                (1, 4),
            ],
        )
        .unwrap();
        let r = ghouila_houri(&d);
        assert!(!r.hypothesis_holds);
        assert!(r.violating_items.iter().any(|v| matches!(
            v,
            Violation::Vertex { vertex, degree: 3, .. } if vertex == "4"
        )));
    }

    #[test]
    fn faudree_examples() {
        assert!(faudree(&Graph::complete(4).unwrap()).hypothesis_holds);
        let r = faudree(&star3());
        assert!(!r.hypothesis_holds);
        assert_eq!((r.parameters.k, r.parameters.s_size), (Some(1), Some(3)));
        // k = 1: a degree-1 vertex always lies in S once n > 2
        let p3 = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        let r = faudree(&p3);
        assert!(!r.hypothesis_holds);
        assert_eq!((r.parameters.k, r.parameters.s_size), (Some(1), Some(2)));
        assert!(faudree(&Graph::complete(3).unwrap()).hypothesis_holds);
    }

    #[test]
    fn faudree_digraph_examples() {
        assert!(faudree_digraph(&Digraph::complete(3).unwrap()).hypothesis_holds);
        let r = faudree_digraph(&Digraph::directed_cycle(3).unwrap());
        assert!(!r.hypothesis_holds);
        assert_eq!((r.parameters.k, r.parameters.s_size), (Some(2), Some(3)));
        // one low-degree vertex (3, with d = 2) and k = 2
        let d = Digraph::new(3, [(1, 2), (2, 1), (1, 3), (3, 2)]).unwrap();
        let r = faudree_digraph(&d);
        assert!(r.hypothesis_holds, "{r:?}");
        assert_eq!((r.parameters.k, r.parameters.s_size), (Some(2), Some(1)));
    }

    #[test]
    fn moon_moser_k_examples() {
        assert!(
            moon_moser_k(&BipartiteGraph::complete(3).unwrap(), 2)
                .unwrap()
                .hypothesis_holds
        );
        let one_regular = zmap(&Digraph::directed_cycle(3).unwrap());
        let r = moon_moser_k(&one_regular, 2).unwrap();
        assert!(!r.hypothesis_holds);
        assert_eq!(r.parameters.s_size, Some(6));
        // x1 and y1 have degree 1, everyone else degree 2
        let g = BipartiteGraph::new(3, [(1, 2), (2, 1), (2, 3), (3, 2), (3, 3)]).unwrap();
        let r = moon_moser_k(&g, 2).unwrap();
        assert_eq!(r.parameters.s_size, Some(2));
        assert!(r.hypothesis_holds);
        assert_eq!(
            moon_moser_k(&g, 3),
            Err(GraphError::ParameterOutOfRange { k: 3, n: 3 })
        );
        assert!(moon_moser_k(&g, 1).is_err());
    }

    #[test]
    fn moon_moser_half_examples() {
        assert!(moon_moser_half(&BipartiteGraph::complete(3).unwrap()).hypothesis_holds);
        assert!(!moon_moser_half(&zmap(&Digraph::directed_cycle(3).unwrap())).hypothesis_holds);
        assert!(moon_moser_half(&BipartiteGraph::complete(2).unwrap()).hypothesis_holds);
        assert!(!moon_moser_half(&BipartiteGraph::complete(1).unwrap()).hypothesis_holds);
    }

    #[test]
    fn disjoint_hc_degree_examples() {
        assert!(disjoint_hc_degree(&Digraph::complete(4).unwrap()).hypothesis_holds);
        assert!(!disjoint_hc_degree(&Digraph::directed_cycle(3).unwrap()).hypothesis_holds);
        assert!(disjoint_hc_degree(&Digraph::complete(3).unwrap()).hypothesis_holds);
    }

    #[test]
    fn las_vergnas_examples() {
        assert!(las_vergnas(&BipartiteGraph::complete(3).unwrap()).hypothesis_holds);
        assert!(!las_vergnas(&zmap(&Digraph::directed_cycle(3).unwrap())).hypothesis_holds);
        let g = BipartiteGraph::complete(3)
            .unwrap()
            .without_edges(&[(1, 1)]);
        let r = las_vergnas(&g);
        assert!(!r.hypothesis_holds);
        assert_eq!(
            r.violating_items,
            vec![Violation::Pair {
                u: "x1".into(),
                v: "y1".into(),
                degree_sum: 4,
                threshold: 5
            }]
        );
    }

    #[test]
    fn woodall_examples() {
        assert!(woodall(&Digraph::complete(3).unwrap()).hypothesis_holds);
        let r = woodall(&Digraph::directed_cycle(3).unwrap());
        assert!(!r.hypothesis_holds);
        assert!(r.violating_items.contains(&Violation::Pair {
            u: "2".into(),
            v: "1".into(),
            degree_sum: 2,
            threshold: 3
        }));
        let k4_minus = Digraph::complete(4).unwrap().without_arcs(&[(1, 2)]);
        assert!(woodall(&k4_minus).hypothesis_holds);
    }

    #[test]
    fn woodall_plus2_examples() {
        assert!(woodall_plus2(&Digraph::complete(4).unwrap()).hypothesis_holds);
        let k4_minus = Digraph::complete(4).unwrap().without_arcs(&[(1, 2)]);
        assert!(!woodall_plus2(&k4_minus).hypothesis_holds);
        let k6_minus = Digraph::complete(6).unwrap().without_arcs(&[(1, 2)]);
        assert!(woodall_plus2(&k6_minus).hypothesis_holds);
    }

    #[test]
    fn ore_bipartite_examples() {
        assert!(
            ore_bipartite(&BipartiteGraph::complete(2).unwrap(), OreThreshold::N).hypothesis_holds
        );
        assert!(
            !ore_bipartite(&zmap(&Digraph::directed_cycle(3).unwrap()), OreThreshold::N)
                .hypothesis_holds
        );
        // the 4-cycle is K_{2,2}: no non-edges at all
        let c4 = BipartiteGraph::new(2, [(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        assert!(ore_bipartite(&c4, OreThreshold::N).hypothesis_holds);
    }

    #[test]
    fn ids_round_trip() {
        for id in ConditionId::ALL {
            assert_eq!(id.as_str().parse::<ConditionId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
        }
    }
}

//! Cycle and matching certificates, and the checks that validate them
//! against a host graph.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{BipartiteGraph, Digraph, Graph};
use crate::incidence::IncidenceMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleKind {
    Directed,
    Undirected,
}

/// A closed vertex sequence `v₁, …, v_l` (the wrap-around `v_l → v₁` is implied).
///
/// For a [`BipartiteGraph`] host the sequence uses combined ids: `x_i` is `i`
/// and `y_j` is `n + j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleWitness {
    pub kind: CycleKind,
    pub sequence: Vec<usize>,
}

impl CycleWitness {
    pub fn directed(sequence: Vec<usize>) -> Self {
        Self {
            kind: CycleKind::Directed,
            sequence,
        }
    }

    pub fn undirected(sequence: Vec<usize>) -> Self {
        Self {
            kind: CycleKind::Undirected,
            sequence,
        }
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Consecutive pairs including the wrap-around, in sequence order.
    /// Undirected pairs are normalized to `(min, max)`.
    pub fn items(&self) -> Vec<(usize, usize)> {
        let l = self.sequence.len();
        (0..l)
            .map(|k| {
                let (a, b) = (self.sequence[k], self.sequence[(k + 1) % l]);
                match self.kind {
                    CycleKind::Directed => (a, b),
                    CycleKind::Undirected => (a.min(b), a.max(b)),
                }
            })
            .collect()
    }
}

/// A graph that cycle witnesses can be checked against.
pub trait CycleHost {
    fn vertex_count(&self) -> usize;
    fn cycle_kind(&self) -> CycleKind;
    /// Adjacency in the witness's vertex numbering (1-based).
    fn linked(&self, u: usize, v: usize) -> bool;
    fn incidence(&self) -> IncidenceMatrix;
    /// Arcs or normalized edges, in incidence column order.
    fn items(&self) -> Vec<(usize, usize)>;
}

impl CycleHost for Digraph {
    fn vertex_count(&self) -> usize {
        self.order()
    }
    fn cycle_kind(&self) -> CycleKind {
        CycleKind::Directed
    }
    fn linked(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v)
    }
    fn incidence(&self) -> IncidenceMatrix {
        IncidenceMatrix::of_digraph(self)
    }
    fn items(&self) -> Vec<(usize, usize)> {
        self.arcs().collect()
    }
}

impl CycleHost for Graph {
    fn vertex_count(&self) -> usize {
        self.order()
    }
    fn cycle_kind(&self) -> CycleKind {
        CycleKind::Undirected
    }
    fn linked(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }
    fn incidence(&self) -> IncidenceMatrix {
        IncidenceMatrix::of_graph(self)
    }
    fn items(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }
}

impl CycleHost for BipartiteGraph {
    fn vertex_count(&self) -> usize {
        2 * self.part_size()
    }
    fn cycle_kind(&self) -> CycleKind {
        CycleKind::Undirected
    }
    fn linked(&self, u: usize, v: usize) -> bool {
        let n = self.part_size();
        let (a, b) = (u.min(v), u.max(v));
        a >= 1 && a <= n && b > n && self.has_edge(a, b - n)
    }
    fn incidence(&self) -> IncidenceMatrix {
        IncidenceMatrix::of_bipartite(self)
    }
    fn items(&self) -> Vec<(usize, usize)> {
        let n = self.part_size();
        self.edges().map(|(x, y)| (x, n + y)).collect()
    }
}

/// Whether `w` is a simple cycle of `host`: matching kind, distinct in-range
/// vertices, every consecutive pair (and the wrap-around) linked. Directed
/// cycles need length ≥ 2, undirected ≥ 3.
pub fn check_cycle<H: CycleHost + ?Sized>(host: &H, w: &CycleWitness) -> bool {
    if w.kind != host.cycle_kind() {
        return false;
    }
    let min_len = match w.kind {
        CycleKind::Directed => 2,
        CycleKind::Undirected => 3,
    };
    let l = w.sequence.len();
    if l < min_len || l > host.vertex_count() {
        return false;
    }
    let mut seen = 0u128;
    for &v in &w.sequence {
        if v == 0 || v > host.vertex_count() || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    (0..l).all(|k| host.linked(w.sequence[k], w.sequence[(k + 1) % l]))
}

/// A simple cycle through every vertex of the host.
pub fn is_hamiltonian_cycle<H: CycleHost + ?Sized>(host: &H, w: &CycleWitness) -> bool {
    w.len() == host.vertex_count() && check_cycle(host, w)
}

/// Matrix-side route for the same question as [`check_cycle`]: selects the
/// incidence columns of the witness's items and tests the banded cycle form.
pub fn check_cycle_by_incidence<H: CycleHost + ?Sized>(host: &H, w: &CycleWitness) -> bool {
    if w.kind != host.cycle_kind() {
        return false;
    }
    let host_items = host.items();
    let mut cols = Vec::with_capacity(w.len());
    let mut distinct = BTreeSet::new();
    for item in w.items() {
        match host_items.binary_search(&item) {
            Ok(c) if distinct.insert(c) => cols.push(c),
            _ => return false,
        }
    }
    host.incidence().select_columns(&cols).is_cycle_form(w.kind) && cols.len() == w.len()
}

/// A set of bipartite edges `(x, y)` no two of which share an endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_unstable();
        pairs.dedup();
        for (i, a) in pairs.iter().enumerate() {
            for b in &pairs[i + 1..] {
                if a.0 == b.0 || a.1 == b.1 {
                    return Err(GraphError::MatchingConflict(a.0, a.1, b.0, b.1));
                }
            }
        }
        Ok(Self { pairs })
    }

    pub(crate) fn from_sorted_unchecked(pairs: Vec<(usize, usize)>) -> Self {
        debug_assert!(Self::new(pairs.clone()).is_ok());
        Self { pairs }
    }

    /// Pairs sorted by `x`.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn validate_in(&self, g: &BipartiteGraph) -> Result<(), GraphError> {
        match self.pairs.iter().find(|&&(x, y)| !g.has_edge(x, y)) {
            Some(&(x, y)) => Err(GraphError::MatchingEdgeMissing { x, y }),
            None => Ok(()),
        }
    }

    /// Valid in `g` and covering all `2n` vertices.
    pub fn is_perfect_in(&self, g: &BipartiteGraph) -> bool {
        self.validate_in(g).is_ok() && self.pairs.len() == g.part_size()
    }

    pub fn is_disjoint_from(&self, other: &Matching) -> bool {
        self.pairs
            .iter()
            .all(|p| other.pairs.binary_search(p).is_err())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_zmap() -> BipartiteGraph {
        BipartiteGraph::new(3, [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]).unwrap()
    }

    #[test]
    fn triangle_witnesses() {
        let c3 = Digraph::directed_cycle(3).unwrap();
        assert!(check_cycle(&c3, &CycleWitness::directed(vec![1, 2, 3])));
        assert!(!check_cycle(&c3, &CycleWitness::directed(vec![1, 3, 2])));
        assert!(!check_cycle(&c3, &CycleWitness::undirected(vec![1, 2, 3])));
        assert!(!check_cycle(&c3, &CycleWitness::directed(vec![1, 2, 2])));
    }

    #[test]
    fn digon_is_a_directed_cycle() {
        let d = Digraph::new(2, [(1, 2), (2, 1)]).unwrap();
        let w = CycleWitness::directed(vec![1, 2]);
        assert!(is_hamiltonian_cycle(&d, &w));
        assert!(check_cycle_by_incidence(&d, &w));
    }

    #[test]
    fn six_cycle_in_zmap_of_complete_triangle() {
        // x1,y2,x3,y1,x2,y3 with x_i = i, y_j = 3 + j
        let g = k3_zmap();
        let w = CycleWitness::undirected(vec![1, 5, 3, 4, 2, 6]);
        assert!(is_hamiltonian_cycle(&g, &w));
        assert!(check_cycle_by_incidence(&g, &w));
        // no edge x1-y1
        assert!(!check_cycle(
            &g,
            &CycleWitness::undirected(vec![1, 4, 2, 6, 3, 5])
        ));
    }

    #[test]
    fn undirected_two_cycle_rejected() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        let w = CycleWitness::undirected(vec![1, 2]);
        assert!(!check_cycle(&g, &w));
        assert!(!check_cycle_by_incidence(&g, &w));
    }

    #[test]
    fn matching_rejects_shared_endpoint() {
        assert!(Matching::new([(1, 2), (1, 3)]).is_err());
        assert!(Matching::new([(1, 2), (3, 2)]).is_err());
        let m = Matching::new([(3, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(m.pairs(), &[(1, 2), (2, 3), (3, 1)]);
        assert!(m.is_perfect_in(&k3_zmap()));
        let missing = Matching::new([(1, 1)]).unwrap();
        assert_eq!(
            missing.validate_in(&k3_zmap()),
            Err(GraphError::MatchingEdgeMissing { x: 1, y: 1 })
        );
    }
}

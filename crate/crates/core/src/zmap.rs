//! The Z-mapping between loopless digraphs and balanced bipartite graphs.
//!
//! Every vertex `v` of a digraph `D` is split into an out-copy `x_v` and an
//! in-copy `y_v`; each arc `u → v` becomes the edge `x_u y_v`. On incidence
//! matrices this is `F = [C⁺; −C⁻]`, where `C⁺` keeps the `+1` (tail) entries
//! of `C` and `C⁻` keeps the `−1` (head) entries.
//!
//! Besides the map and its inverse the module carries the two constructive
//! conversions between cycles and matchings: a Hamiltonian cycle of `Z(D)`
//! pulls back to two cycle factors of `D`, and a Hamiltonian cycle of `D`
//! pushes forward to a perfect matching of `Z(D)`.

use crate::cycle::{is_hamiltonian_cycle, CycleWitness, Matching};
use crate::error::GraphError;
use crate::graph::{Arc, BipartiteGraph, Digraph};
use crate::incidence::IncidenceMatrix;

/// Sign split of a digraph incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPair {
    /// Entries `≥ 0` of `C`, zero elsewhere.
    pub c_plus: IncidenceMatrix,
    /// Entries `≤ 0` of `C`, zero elsewhere.
    pub c_minus: IncidenceMatrix,
}

pub fn split_incidence(c: &IncidenceMatrix) -> Result<SplitPair, GraphError> {
    if let Some(column) = c.first_non_digraph_column() {
        return Err(GraphError::NotDigraphIncidence { column });
    }
    Ok(SplitPair {
        c_plus: c.map(|e| e.max(0)),
        c_minus: c.map(|e| e.min(0)),
    })
}

/// `F = [C⁺; −C⁻]` for the digraph's incidence matrix.
pub fn zmapping_incidence(d: &Digraph) -> IncidenceMatrix {
    let split = split_incidence(&IncidenceMatrix::of_digraph(d))
        .expect("digraph incidence matrices always have digraph column shape");
    split
        .c_plus
        .stack(&split.c_minus.negated())
        .expect("split halves share a column count")
}

/// `Z(D)`: edge `(x_i, y_j)` for every arc `<i, j>`.
pub fn zmap(d: &Digraph) -> BipartiteGraph {
    BipartiteGraph::from_x_masks(d.out_masks().to_vec())
}

/// Inverse of [`zmap`]. Fails on an edge `(x_i, y_i)`, which would pull back
/// to a self-loop.
pub fn unzmap(g: &BipartiteGraph) -> Result<Digraph, GraphError> {
    if let Some(index) = (1..=g.part_size()).find(|&i| g.has_edge(i, i)) {
        return Err(GraphError::DiagonalEdge { index });
    }
    Ok(Digraph::from_out_masks(g.x_masks().to_vec()))
}

/// The two alternating halves of a Hamiltonian cycle of `Z(D)`, read back
/// as arc sets of `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pullback {
    /// Edges at odd positions (1st, 3rd, …) along the cycle sequence.
    pub odd: Vec<Arc>,
    /// Edges at even positions (2nd, 4th, …).
    pub even: Vec<Arc>,
}

impl Pullback {
    pub fn halves(&self) -> [&[Arc]; 2] {
        [&self.odd, &self.even]
    }
}

/// Splits a Hamiltonian cycle of `g` into its alternating edge halves and maps
/// each through the inverse Z-mapping.
///
/// Each half is a perfect matching of `g`, hence a spanning 1-regular arc set
/// of `unzmap(g)`. Neither half is promised to be a single cycle.
pub fn ham_cycle_pullback(g: &BipartiteGraph, w: &CycleWitness) -> Result<Pullback, GraphError> {
    if let Some(index) = (1..=g.part_size()).find(|&i| g.has_edge(i, i)) {
        return Err(GraphError::DiagonalEdge { index });
    }
    if !is_hamiltonian_cycle(g, w) {
        return Err(GraphError::NotHamiltonian);
    }
    let n = g.part_size();
    let mut odd = Vec::with_capacity(n);
    let mut even = Vec::with_capacity(n);
    for (k, (a, b)) in w.items().into_iter().enumerate() {
        // items are normalized, so `a` is the x-end and `b - n` the y-end
        let arc = (a, b - n);
        if k % 2 == 0 {
            odd.push(arc);
        } else {
            even.push(arc);
        }
    }
    odd.sort_unstable();
    even.sort_unstable();
    // Subtracting the halves would cancel a column only if one arc sat in
    // both; a simple cycle never repeats an edge.
    if let Some(&(tail, head)) = odd.iter().find(|a| even.binary_search(a).is_ok()) {
        return Err(GraphError::CancelledColumn { tail, head });
    }
    Ok(Pullback { odd, even })
}

/// `M = { (x_u, y_v) : <u, v> ∈ L }` for a Hamiltonian cycle `L` of `d`.
pub fn matching_pushforward(d: &Digraph, w: &CycleWitness) -> Result<Matching, GraphError> {
    if !is_hamiltonian_cycle(d, w) {
        return Err(GraphError::NotHamiltonian);
    }
    Matching::new(w.items())
}

/// A spanning subdigraph with every in- and out-degree equal to one, stored
/// as a successor permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleFactor {
    successor: Vec<usize>,
}

impl CycleFactor {
    /// `None` unless `arcs` gives every vertex of `1..=n` exactly one
    /// out-arc and one in-arc.
    pub fn from_arcs(n: usize, arcs: &[Arc]) -> Option<Self> {
        let mut successor = vec![0usize; n];
        let mut has_pred = vec![false; n];
        for &(u, v) in arcs {
            if u == 0 || v == 0 || u > n || v > n {
                return None;
            }
            if successor[u - 1] != 0 || has_pred[v - 1] {
                return None;
            }
            successor[u - 1] = v;
            has_pred[v - 1] = true;
        }
        successor
            .iter()
            .all(|&s| s != 0)
            .then_some(Self { successor })
    }

    /// Successor of vertex `v` (1-based).
    pub fn successor(&self, v: usize) -> usize {
        self.successor[v - 1]
    }

    /// No vertex maps to itself.
    pub fn is_derangement(&self) -> bool {
        self.successor.iter().enumerate().all(|(i, &s)| s != i + 1)
    }

    /// Cycle decomposition, each cycle starting at its smallest vertex,
    /// cycles ordered by that vertex.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.successor.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v - 1] {
                seen[v - 1] = true;
                cycle.push(v);
                v = self.successor(v);
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_single_cycle(&self) -> bool {
        self.cycles().len() == 1
    }
}

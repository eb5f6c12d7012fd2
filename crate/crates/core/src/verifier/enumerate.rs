//! Labeled instance enumeration by bitmask.
//!
//! Instance `i` of order `n` has the `k`-th potential arc/edge present iff bit
//! `k` of `i` is set, potential arcs/edges taken in lexicographic order. Hence
//! enumeration order is increasing bitmask order and every labeled instance
//! appears exactly once.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{InstanceKind, VerifyError};
use crate::graph::{BipartiteGraph, Digraph, Graph};

/// Largest order each enumerator accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct EnumerationLimits {
    pub digraph: usize,
    pub bipartite: usize,
    pub graph: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self {
            digraph: 5,
            bipartite: 5,
            graph: 7,
        }
    }
}

impl EnumerationLimits {
    pub fn for_kind(&self, kind: InstanceKind) -> usize {
        match kind {
            InstanceKind::Digraph => self.digraph,
            InstanceKind::Bipartite => self.bipartite,
            InstanceKind::Graph => self.graph,
        }
    }
}

/// Number of potential arcs/edges, i.e. bits per instance.
pub fn slot_count(kind: InstanceKind, n: usize) -> usize {
    match kind {
        InstanceKind::Digraph => n * n.saturating_sub(1),
        InstanceKind::Bipartite => n * n,
        InstanceKind::Graph => n * n.saturating_sub(1) / 2,
    }
}

/// Digraph number `index` of order `n`; needs `n(n−1) ≤ 64`.
pub fn digraph_from_index(n: usize, index: u64) -> Digraph {
    let mut out = vec![0u64; n];
    let mut bit = 0;
    for (u, row) in out.iter_mut().enumerate() {
        for v in 0..n {
            if u != v {
                if index >> bit & 1 == 1 {
                    *row |= 1 << v;
                }
                bit += 1;
            }
        }
    }
    Digraph::from_out_masks(out)
}

/// Bipartite graph number `index` of part size `n`; needs `n² ≤ 64`.
pub fn bipartite_from_index(n: usize, index: u64) -> BipartiteGraph {
    let row = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let x_adj = (0..n).map(|x| index >> (x * n) & row).collect();
    BipartiteGraph::from_x_masks(x_adj)
}

/// Graph number `index` on `n` vertices; needs `n(n−1)/2 ≤ 64`.
pub fn graph_from_index(n: usize, index: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 1..=n {
        for v in u + 1..=n {
            if index >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("enumerated edges are in range and loopless")
}

fn check_limit(kind: InstanceKind, n: usize, max: usize) -> Result<u32, VerifyError> {
    let slots = slot_count(kind, n);
    if n == 0 || n > max || slots > 63 {
        return Err(VerifyError::OrderAboveLimit { kind, n, max });
    }
    Ok(slots as u32)
}

/// All `2^(n(n−1))` labeled loopless digraphs on `n` vertices.
pub fn enumerate_digraphs(
    n: usize,
    limits: &EnumerationLimits,
) -> Result<impl Iterator<Item = Digraph>, VerifyError> {
    let slots = check_limit(InstanceKind::Digraph, n, limits.digraph)?;
    Ok((0..1u64 << slots).map(move |i| digraph_from_index(n, i)))
}

/// All `2^(n²)` balanced bipartite graphs of part size `n`.
pub fn enumerate_bipartite(
    n: usize,
    limits: &EnumerationLimits,
) -> Result<impl Iterator<Item = BipartiteGraph>, VerifyError> {
    let slots = check_limit(InstanceKind::Bipartite, n, limits.bipartite)?;
    Ok((0..1u64 << slots).map(move |i| bipartite_from_index(n, i)))
}

/// All `2^(n(n−1)/2)` labeled simple graphs on `n` vertices.
pub fn enumerate_graphs(
    n: usize,
    limits: &EnumerationLimits,
) -> Result<impl Iterator<Item = Graph>, VerifyError> {
    let slots = check_limit(InstanceKind::Graph, n, limits.graph)?;
    Ok((0..1u64 << slots).map(move |i| graph_from_index(n, i)))
}

/// Index range for an exhaustive sweep at order `n`.
pub(crate) fn exhaustive_range(
    kind: InstanceKind,
    n: usize,
    limits: &EnumerationLimits,
) -> Result<std::ops::Range<u64>, VerifyError> {
    let slots = check_limit(kind, n, limits.for_kind(kind))?;
    Ok(0..1u64 << slots)
}

/// `samples` uniformly random instance indices of order `n`. The stream is a
/// pure function of `(seed, kind, n)`, so every claim on the same kind sees
/// the same sample.
pub(crate) fn random_indices(
    kind: InstanceKind,
    n: usize,
    samples: u64,
    seed: u64,
) -> Result<Vec<u64>, VerifyError> {
    let slots = slot_count(kind, n);
    if n == 0 || slots > 64 {
        return Err(VerifyError::OrderAboveLimit {
            kind,
            n,
            max: random_max(kind),
        });
    }
    let mask = if slots == 64 {
        u64::MAX
    } else {
        (1u64 << slots) - 1
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(kind.stream_tag() << 8 | n as u64);
    Ok((0..samples).map(|_| rng.random::<u64>() & mask).collect())
}

fn random_max(kind: InstanceKind) -> usize {
    match kind {
        InstanceKind::Digraph | InstanceKind::Bipartite => 8,
        InstanceKind::Graph => 11,
    }
}

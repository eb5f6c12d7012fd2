//! Backtracking Hamiltonian cycle search over bitmask adjacency.

use std::ops::ControlFlow;

use super::scc::strongly_connected_masks;
use super::{Budget, Meter, SolveResult};
use crate::cycle::CycleWitness;
use crate::graph::{bits, BipartiteGraph, Digraph, Graph};

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Depth-first extension of a path from vertex 0, trying successors in
/// increasing order. Prunes a branch when some unvisited vertex has lost
/// every possible predecessor or successor.
pub(crate) struct DirectedSearch<'a> {
    out: &'a [u64],
    inn: &'a [u64],
    full: u64,
    path: Vec<usize>,
    meter: &'a Meter,
}

impl<'a> DirectedSearch<'a> {
    pub(crate) fn new(out: &'a [u64], inn: &'a [u64], meter: &'a Meter) -> Self {
        Self {
            out,
            inn,
            full: full_mask(out.len()),
            path: Vec::with_capacity(out.len()),
            meter,
        }
    }

    /// Calls `on_cycle` with each Hamiltonian cycle (0-based, starting at 0)
    /// until it breaks or the meter runs out. Each cycle is reported once.
    pub(crate) fn run<F>(&mut self, on_cycle: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()> + ?Sized,
    {
        let n = self.out.len();
        if n < 2
            || self.out.contains(&0)
            || self.inn.contains(&0)
            || !strongly_connected_masks(self.out)
        {
            return ControlFlow::Continue(());
        }
        self.path.clear();
        self.path.push(0);
        self.extend(0, 1, on_cycle)
    }

    fn extend<F>(&mut self, cur: usize, visited: u64, on_cycle: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()> + ?Sized,
    {
        if !self.meter.tick() {
            return ControlFlow::Break(());
        }
        if visited == self.full {
            return if self.out[cur] & 1 == 1 {
                on_cycle(&self.path)
            } else {
                ControlFlow::Continue(())
            };
        }
        let unvisited = self.full & !visited;
        let may_precede = unvisited | 1 << cur;
        let may_follow = unvisited | 1;
        for v in bits(unvisited) {
            if self.inn[v] & may_precede == 0 || self.out[v] & may_follow == 0 {
                return ControlFlow::Continue(());
            }
        }
        for next in bits(self.out[cur] & unvisited) {
            self.path.push(next);
            self.extend(next, visited | 1 << next, on_cycle)?;
            self.path.pop();
        }
        ControlFlow::Continue(())
    }
}

/// Undirected counterpart of [`DirectedSearch`]. Reports each cycle once per
/// direction.
struct UndirectedSearch<'a> {
    adj: &'a [u64],
    full: u64,
    path: Vec<usize>,
    meter: &'a Meter,
}

impl UndirectedSearch<'_> {
    fn run<F>(&mut self, on_cycle: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()> + ?Sized,
    {
        let n = self.adj.len();
        if n < 3
            || self.adj.iter().any(|m| m.count_ones() < 2)
            || !strongly_connected_masks(self.adj)
        {
            return ControlFlow::Continue(());
        }
        self.path.clear();
        self.path.push(0);
        self.extend(0, 1, on_cycle)
    }

    fn extend<F>(&mut self, cur: usize, visited: u64, on_cycle: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()> + ?Sized,
    {
        if !self.meter.tick() {
            return ControlFlow::Break(());
        }
        if visited == self.full {
            return if self.adj[cur] & 1 == 1 {
                on_cycle(&self.path)
            } else {
                ControlFlow::Continue(())
            };
        }
        let unvisited = self.full & !visited;
        let available = unvisited | 1 << cur | 1;
        for v in bits(unvisited) {
            if (self.adj[v] & available).count_ones() < 2 {
                return ControlFlow::Continue(());
            }
        }
        for next in bits(self.adj[cur] & unvisited) {
            self.path.push(next);
            self.extend(next, visited | 1 << next, on_cycle)?;
            self.path.pop();
        }
        ControlFlow::Continue(())
    }
}

fn first_cycle<S>(search: S) -> Option<Vec<usize>>
where
    S: FnOnce(&mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()>,
{
    let mut found = None;
    let _ = search(&mut |path: &[usize]| {
        found = Some(path.iter().map(|v| v + 1).collect());
        ControlFlow::Break(())
    });
    found
}

pub(crate) fn directed_cycle_with(d: &Digraph, meter: &Meter) -> Option<CycleWitness> {
    let mut search = DirectedSearch::new(d.out_masks(), d.in_masks(), meter);
    first_cycle(|f| search.run(f)).map(CycleWitness::directed)
}

/// Exact directed Hamiltonicity. The witness starts at vertex 1 and takes the
/// smallest feasible successor at every branch. A single vertex is never
/// Hamiltonian; a digon is.
pub fn find_hamiltonian_cycle(d: &Digraph, budget: Budget) -> SolveResult<CycleWitness> {
    let meter = Meter::new(budget);
    let found = directed_cycle_with(d, &meter);
    debug_assert!(found.is_none() || super::strongly_connected(d));
    meter.finish(found)
}

/// Exact undirected Hamiltonicity (needs at least three vertices).
pub fn find_hamiltonian_cycle_graph(g: &Graph, budget: Budget) -> SolveResult<CycleWitness> {
    let meter = Meter::new(budget);
    let mut search = UndirectedSearch {
        adj: g.adj_masks(),
        full: full_mask(g.order()),
        path: Vec::with_capacity(g.order()),
        meter: &meter,
    };
    let found = first_cycle(|f| search.run(f)).map(CycleWitness::undirected);
    meter.finish(found)
}

/// Hamiltonicity of a balanced bipartite graph, witness in combined ids
/// (`x_i = i`, `y_j = n + j`). Part size 1 is never Hamiltonian.
pub fn find_hamiltonian_cycle_bipartite(
    g: &BipartiteGraph,
    budget: Budget,
) -> SolveResult<CycleWitness> {
    find_hamiltonian_cycle_graph(&g.to_graph(), budget)
}

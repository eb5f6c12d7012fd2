//! Searches for pairs of arc-/edge-disjoint spanning structures, and for
//! Hamiltonian cycles through a prescribed perfect matching.

use std::ops::ControlFlow;

use super::hamilton::{directed_cycle_with, DirectedSearch};
use super::matching::hopcroft_karp;
use super::{Budget, Meter, SolveResult};
use crate::cycle::{CycleWitness, Matching};
use crate::error::GraphError;
use crate::graph::{bits, BipartiteGraph, Digraph};

/// Two arc-disjoint Hamiltonian cycles. Enumerates Hamiltonian cycles in
/// search order; for each one, removes its arcs and re-solves.
pub fn find_two_disjoint_hamiltonian_cycles(
    d: &Digraph,
    budget: Budget,
) -> SolveResult<(CycleWitness, CycleWitness)> {
    let meter = Meter::new(budget);
    let mut found = None;
    let mut search = DirectedSearch::new(d.out_masks(), d.in_masks(), &meter);
    let _ = search.run(&mut |path: &[usize]| {
        let first = CycleWitness::directed(path.iter().map(|v| v + 1).collect());
        let residual = d.without_arcs(&first.items());
        match directed_cycle_with(&residual, &meter) {
            Some(second) => {
                found = Some((first, second));
                ControlFlow::Break(())
            }
            None if meter.exhausted() => ControlFlow::Break(()),
            None => ControlFlow::Continue(()),
        }
    });
    meter.finish(found)
}

/// Calls `f` with each perfect matching (as `mate[x] = y`, 0-based), `x`
/// assigned in order and `y` candidates tried in increasing order.
fn for_each_perfect_matching<F>(x_adj: &[u64], meter: &Meter, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn go<F>(
        x: usize,
        used: u64,
        x_adj: &[u64],
        mate: &mut Vec<usize>,
        meter: &Meter,
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if !meter.tick() {
            return ControlFlow::Break(());
        }
        if x == x_adj.len() {
            return f(mate);
        }
        for y in bits(x_adj[x] & !used) {
            mate.push(y);
            go(x + 1, used | 1 << y, x_adj, mate, meter, f)?;
            mate.pop();
        }
        ControlFlow::Continue(())
    }
    let mut mate = Vec::with_capacity(x_adj.len());
    go(0, 0, x_adj, &mut mate, meter, f)
}

fn to_matching(mate: impl IntoIterator<Item = (usize, usize)>) -> Matching {
    Matching::from_sorted_unchecked(mate.into_iter().map(|(x, y)| (x + 1, y + 1)).collect())
}

/// Every perfect matching of `g`, in search order. The outcome is `Found`
/// (possibly with an empty list) unless the budget runs out.
pub fn perfect_matchings(g: &BipartiteGraph, budget: Budget) -> SolveResult<Vec<Matching>> {
    let meter = Meter::new(budget);
    let mut all = Vec::new();
    let _ = for_each_perfect_matching(g.x_masks(), &meter, &mut |mate: &[usize]| {
        all.push(to_matching(mate.iter().copied().enumerate()));
        ControlFlow::Continue(())
    });
    meter.finish((!meter.exhausted()).then_some(all))
}

/// Two edge-disjoint perfect matchings. Enumerates perfect matchings; for
/// each one, removes its edges and looks for a perfect matching in the rest.
pub fn find_two_disjoint_perfect_matchings(
    g: &BipartiteGraph,
    budget: Budget,
) -> SolveResult<(Matching, Matching)> {
    let meter = Meter::new(budget);
    let x_adj = g.x_masks();
    let mut found = None;
    let _ = for_each_perfect_matching(x_adj, &meter, &mut |mate: &[usize]| {
        let residual: Vec<u64> = x_adj
            .iter()
            .zip(mate)
            .map(|(&m, &y)| m & !(1 << y))
            .collect();
        if !meter.tick() {
            return ControlFlow::Break(());
        }
        let other = hopcroft_karp(&residual);
        if other.iter().all(Option::is_some) {
            found = Some((
                to_matching(mate.iter().copied().enumerate()),
                to_matching(
                    other
                        .into_iter()
                        .enumerate()
                        .map(|(x, y)| (x, y.unwrap_or(0))),
                ),
            ));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    meter.finish(found)
}

/// Whether some Hamiltonian cycle of `g` contains every edge of the perfect
/// matching `m`.
///
/// Such a cycle alternates `m`-edges with edges outside `m`, so it is a
/// directed Hamiltonian cycle of the auxiliary digraph on the `x` side with
/// an arc `i → j` whenever `x_j` is adjacent to the partner of `x_i` (`j ≠ i`).
/// The returned witness is the bipartite cycle in combined ids.
pub fn extends_to_hamiltonian(
    g: &BipartiteGraph,
    m: &Matching,
    budget: Budget,
) -> Result<SolveResult<CycleWitness>, GraphError> {
    m.validate_in(g)?;
    let n = g.part_size();
    if m.len() != n {
        return Err(GraphError::NotPerfect { size: m.len(), n });
    }
    let partner: Vec<usize> = m.pairs().iter().map(|&(_, y)| y).collect();
    let aux_arcs = (1..=n).flat_map(|i| {
        g.y_neighbors(partner[i - 1])
            .filter(move |&j| j != i)
            .map(move |j| (i, j))
    });
    let aux = Digraph::new(n, aux_arcs)?;
    let meter = Meter::new(budget);
    let found = directed_cycle_with(&aux, &meter).map(|cycle| {
        let seq = cycle
            .sequence
            .iter()
            .flat_map(|&i| [i, n + partner[i - 1]])
            .collect();
        CycleWitness::undirected(seq)
    });
    Ok(meter.finish(found))
}

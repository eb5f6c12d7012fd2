//! Maximum bipartite matching (Hopcroft–Karp).

use std::collections::VecDeque;

use crate::cycle::Matching;
use crate::graph::{bits, BipartiteGraph};

const UNREACHED: u32 = u32::MAX;

/// Returns `mate_of_x[x] = Some(y)` (0-based) for a maximum matching.
pub(crate) fn hopcroft_karp(x_adj: &[u64]) -> Vec<Option<usize>> {
    let n = x_adj.len();
    let mut mate_x: Vec<Option<usize>> = vec![None; n];
    let mut mate_y: Vec<Option<usize>> = vec![None; n];
    let mut dist = vec![UNREACHED; n];

    loop {
        // BFS layers from free x vertices along alternating paths.
        let mut queue = VecDeque::new();
        for x in 0..n {
            if mate_x[x].is_none() {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = UNREACHED;
            }
        }
        let mut reachable_free_y = false;
        while let Some(x) = queue.pop_front() {
            for y in bits(x_adj[x]) {
                match mate_y[y] {
                    None => reachable_free_y = true,
                    Some(x2) if dist[x2] == UNREACHED => {
                        dist[x2] = dist[x] + 1;
                        queue.push_back(x2);
                    }
                    Some(_) => {}
                }
            }
        }
        if !reachable_free_y {
            return mate_x;
        }
        for x in 0..n {
            if mate_x[x].is_none() {
                augment(x, x_adj, &mut dist, &mut mate_x, &mut mate_y);
            }
        }
    }
}

fn augment(
    x: usize,
    x_adj: &[u64],
    dist: &mut [u32],
    mate_x: &mut [Option<usize>],
    mate_y: &mut [Option<usize>],
) -> bool {
    for y in bits(x_adj[x]) {
        let ok = match mate_y[y] {
            None => true,
            Some(x2) => dist[x2] == dist[x] + 1 && augment(x2, x_adj, dist, mate_x, mate_y),
        };
        if ok {
            mate_x[x] = Some(y);
            mate_y[y] = Some(x);
            return true;
        }
    }
    dist[x] = UNREACHED;
    false
}

/// A maximum-cardinality matching. Deterministic for a given graph.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let pairs = hopcroft_karp(g.x_masks())
        .into_iter()
        .enumerate()
        .filter_map(|(x, y)| y.map(|y| (x + 1, y + 1)))
        .collect();
    Matching::from_sorted_unchecked(pairs)
}

pub fn has_perfect_matching(g: &BipartiteGraph) -> bool {
    max_matching(g).len() == g.part_size()
}

//! Fixed inputs shared by the benchmarks.

use zham_core::Digraph;

/// Circulant digraph on `n` vertices with arcs `i → i+s` for each step `s`.
pub fn circulant(n: usize, steps: &[usize]) -> Digraph {
    let arcs = (0..n).flat_map(|i| steps.iter().map(move |&s| (i + 1, (i + s) % n + 1)));
    Digraph::new(n, arcs).expect("steps are nonzero modulo n")
}

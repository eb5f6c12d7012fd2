use crate::graph::{bits, Digraph};

struct Tarjan<'a> {
    out: &'a [u64],
    next_index: usize,
    index: Vec<Option<usize>>,
    lowlink: Vec<usize>,
    on_stack: u64,
    stack: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl Tarjan<'_> {
    fn connect(&mut self, v: usize) {
        self.index[v] = Some(self.next_index);
        self.lowlink[v] = self.next_index;
        self.next_index += 1;
        self.stack.push(v);
        self.on_stack |= 1 << v;

        for w in bits(self.out[v]) {
            match self.index[w] {
                None => {
                    self.connect(w);
                    self.lowlink[v] = self.lowlink[v].min(self.lowlink[w]);
                }
                Some(iw) if self.on_stack >> w & 1 == 1 => {
                    self.lowlink[v] = self.lowlink[v].min(iw);
                }
                Some(_) => {}
            }
        }

        if Some(self.lowlink[v]) == self.index[v] {
            let mut comp = Vec::new();
            loop {
                let w = self.stack.pop().expect("v is still on the stack");
                self.on_stack &= !(1 << w);
                comp.push(w + 1);
                if w == v {
                    break;
                }
            }
            comp.sort_unstable();
            self.components.push(comp);
        }
    }
}

/// Strongly connected components (Tarjan), sinks first. Vertices 1-based,
/// sorted within each component. Recursion depth is bounded by the vertex
/// count, which is at most 32.
pub fn strong_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.order();
    let mut t = Tarjan {
        out: d.out_masks(),
        next_index: 0,
        index: vec![None; n],
        lowlink: vec![0; n],
        on_stack: 0,
        stack: Vec::with_capacity(n),
        components: Vec::new(),
    };
    for v in 0..n {
        if t.index[v].is_none() {
            t.connect(v);
        }
    }
    t.components
}

/// Every ordered pair of vertices is joined by a directed path.
pub fn strongly_connected(d: &Digraph) -> bool {
    strong_components(d).len() == 1
}

pub(crate) fn strongly_connected_masks(out: &[u64]) -> bool {
    let n = out.len();
    if n == 0 {
        return false;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let reach = |adj: &dyn Fn(usize) -> u64| {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj(v);
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    };
    if reach(&|v| out[v]) != full {
        return false;
    }
    let mut inn = vec![0u64; n];
    for (u, &m) in out.iter().enumerate() {
        for v in bits(m) {
            inn[v] |= 1 << u;
        }
    }
    reach(&|v| inn[v]) == full
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(strongly_connected(&Digraph::directed_cycle(3).unwrap()));
        assert!(!strongly_connected(&Digraph::new(2, [(1, 2)]).unwrap()));
        assert!(strongly_connected(&Digraph::empty(1).unwrap()));
        assert!(!strongly_connected(&Digraph::empty(2).unwrap()));
    }

    #[test]
    fn components_of_chain() {
        let d = Digraph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(strong_components(&d), vec![vec![3], vec![2], vec![1]]);
        let d = Digraph::new(4, [(1, 2), (2, 1), (2, 3), (3, 4), (4, 3)]).unwrap();
        assert_eq!(strong_components(&d), vec![vec![3, 4], vec![1, 2]]);
    }

    #[test]
    fn tarjan_agrees_with_reachability_on_all_three_vertex_digraphs() {
        for mask in 0u32..64 {
            let arcs = crate::verifier::digraph_from_index(3, mask as u64);
            assert_eq!(
                strongly_connected(&arcs),
                strongly_connected_masks(arcs.out_masks()),
                "mask {mask}"
            );
        }
    }
}

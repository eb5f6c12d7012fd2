//! Simple graph value types.
//!
//! Vertices are 1-based in every public signature. Internally each type keeps
//! one `u64` neighbourhood mask per vertex (bit `i` stands for vertex `i + 1`),
//! which is what the exact solvers iterate over.

use crate::error::GraphError;

/// Largest vertex count accepted for [`Digraph`] and for the part size of a
/// [`BipartiteGraph`].
pub const MAX_ORDER: usize = 32;

/// Largest vertex count accepted for an undirected [`Graph`]. Twice
/// [`MAX_ORDER`] so that any bipartite graph can be viewed as a plain graph.
pub const MAX_GRAPH_ORDER: usize = 64;

/// An arc `<tail, head>`, 1-based.
pub type Arc = (usize, usize);

fn check_order(n: usize, max: usize) -> Result<(), GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyVertexSet);
    }
    if n > max {
        return Err(GraphError::TooManyVertices { n, max });
    }
    Ok(())
}

fn check_endpoint(v: usize, n: usize) -> Result<(), GraphError> {
    if v == 0 || v > n {
        Err(GraphError::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Out-, in- and total degree of one digraph vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Degree {
    pub out_degree: usize,
    pub in_degree: usize,
    pub total: usize,
}

/// A simple loopless digraph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    /// Builds a digraph, dropping duplicate arcs.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Arc>,
    {
        check_order(n, MAX_ORDER)?;
        let mut g = Self::empty_unchecked(n);
        for (u, v) in arcs {
            check_endpoint(u, n)?;
            check_endpoint(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.insert(u - 1, v - 1);
        }
        Ok(g)
    }

    /// The arcless digraph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n, MAX_ORDER)?;
        Ok(Self::empty_unchecked(n))
    }

    /// The complete loopless digraph `K_n*` (every ordered pair of distinct vertices).
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        check_order(n, MAX_ORDER)?;
        let mut g = Self::empty_unchecked(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    g.insert(u, v);
                }
            }
        }
        Ok(g)
    }

    /// The directed cycle `1 -> 2 -> ... -> n -> 1`, `n >= 2`.
    pub fn directed_cycle(n: usize) -> Result<Self, GraphError> {
        if n == 1 {
            return Err(GraphError::SelfLoop { vertex: 1 });
        }
        Self::new(n, (1..=n).map(|u| (u, u % n + 1)))
    }

    fn empty_unchecked(n: usize) -> Self {
        Self {
            n,
            out: vec![0; n],
            inn: vec![0; n],
        }
    }

    fn insert(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
    }

    pub(crate) fn from_out_masks(out: Vec<u64>) -> Self {
        let n = out.len();
        let mut inn = vec![0u64; n];
        for (u, &m) in out.iter().enumerate() {
            for v in bits(m) {
                inn[v] |= 1 << u;
            }
        }
        Self { n, out, inn }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        (1..=self.n).contains(&u)
            && (1..=self.n).contains(&v)
            && self.out[u - 1] >> (v - 1) & 1 == 1
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, &m)| bits(m).map(move |v| (u + 1, v + 1)))
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> {
        bits(self.out[u - 1]).map(|v| v + 1)
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.inn[v - 1]).map(|u| u + 1)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u - 1].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v - 1].count_ones() as usize
    }

    /// `d(v) = d⁺(v) + d⁻(v)`.
    pub fn degree(&self, v: usize) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    /// Per-vertex degrees, index `i` holding vertex `i + 1`.
    pub fn degrees(&self) -> Vec<Degree> {
        (1..=self.n)
            .map(|v| Degree {
                out_degree: self.out_degree(v),
                in_degree: self.in_degree(v),
                total: self.degree(v),
            })
            .collect()
    }

    /// A copy with the given arcs removed. Arcs not present are ignored.
    pub fn without_arcs<'a, I>(&self, arcs: I) -> Self
    where
        I: IntoIterator<Item = &'a Arc>,
    {
        let mut g = self.clone();
        for &(u, v) in arcs {
            if self.has_arc(u, v) {
                g.out[u - 1] &= !(1 << (v - 1));
                g.inn[v - 1] &= !(1 << (u - 1));
            }
        }
        g
    }

    pub(crate) fn out_masks(&self) -> &[u64] {
        &self.out
    }

    pub(crate) fn in_masks(&self) -> &[u64] {
        &self.inn
    }
}

/// A simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from unordered pairs; `(u, v)` and `(v, u)` are the same edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n, MAX_GRAPH_ORDER)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            check_endpoint(u, n)?;
            check_endpoint(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        Ok(Self { n, adj })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (1..=self.n).contains(&u)
            && (1..=self.n).contains(&v)
            && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &m)| bits(m >> u >> 1).map(move |off| (u + 1, u + off + 2)))
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[u - 1]).map(|v| v + 1)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u - 1].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub(crate) fn adj_masks(&self) -> &[u64] {
        &self.adj
    }
}

/// Which side of a balanced bipartite graph a vertex lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// Out-role copies `v⁺`.
    X,
    /// In-role copies `v⁻`.
    Y,
}

/// A balanced bipartite graph `G(X, Y; E)` with `|X| = |Y| = n`.
///
/// Edges are pairs `(i, j)` meaning `x_i y_j`. When the graph is viewed
/// as a plain graph on `2n` vertices (see [`BipartiteGraph::to_graph`] and
/// cycle witnesses), `x_i` is vertex `i` and `y_j` is vertex `n + j`, the
/// same row order as the stacked incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    n: usize,
    x_adj: Vec<u64>,
    y_adj: Vec<u64>,
}

impl BipartiteGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n, MAX_ORDER)?;
        let mut g = Self {
            n,
            x_adj: vec![0; n],
            y_adj: vec![0; n],
        };
        for (x, y) in edges {
            check_endpoint(x, n)?;
            check_endpoint(y, n)?;
            g.insert(x - 1, y - 1);
        }
        Ok(g)
    }

    /// `K_{n,n}`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (1..=n).flat_map(|x| (1..=n).map(move |y| (x, y))))
    }

    fn insert(&mut self, x: usize, y: usize) {
        self.x_adj[x] |= 1 << y;
        self.y_adj[y] |= 1 << x;
    }

    pub(crate) fn from_x_masks(x_adj: Vec<u64>) -> Self {
        let n = x_adj.len();
        let mut y_adj = vec![0u64; n];
        for (x, &m) in x_adj.iter().enumerate() {
            for y in bits(m) {
                y_adj[y] |= 1 << x;
            }
        }
        Self { n, x_adj, y_adj }
    }

    /// Part size `n`.
    pub fn part_size(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.x_adj.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        (1..=self.n).contains(&x)
            && (1..=self.n).contains(&y)
            && self.x_adj[x - 1] >> (y - 1) & 1 == 1
    }

    /// Edges `(x, y)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.x_adj
            .iter()
            .enumerate()
            .flat_map(|(x, &m)| bits(m).map(move |y| (x + 1, y + 1)))
    }

    pub fn x_neighbors(&self, x: usize) -> impl Iterator<Item = usize> {
        bits(self.x_adj[x - 1]).map(|y| y + 1)
    }

    pub fn y_neighbors(&self, y: usize) -> impl Iterator<Item = usize> {
        bits(self.y_adj[y - 1]).map(|x| x + 1)
    }

    pub fn x_degree(&self, x: usize) -> usize {
        self.x_adj[x - 1].count_ones() as usize
    }

    pub fn y_degree(&self, y: usize) -> usize {
        self.y_adj[y - 1].count_ones() as usize
    }

    pub fn degree(&self, side: Side, i: usize) -> usize {
        match side {
            Side::X => self.x_degree(i),
            Side::Y => self.y_degree(i),
        }
    }

    /// True when some edge `(x_i, y_i)` exists; such graphs have no loopless preimage.
    pub fn has_diagonal_edge(&self) -> bool {
        (0..self.n).any(|i| self.x_adj[i] >> i & 1 == 1)
    }

    /// A copy with the given edges removed.
    pub fn without_edges<'a, I>(&self, edges: I) -> Self
    where
        I: IntoIterator<Item = &'a (usize, usize)>,
    {
        let mut g = self.clone();
        for &(x, y) in edges {
            if self.has_edge(x, y) {
                g.x_adj[x - 1] &= !(1 << (y - 1));
                g.y_adj[y - 1] &= !(1 << (x - 1));
            }
        }
        g
    }

    /// The same graph as a plain graph on `2n` vertices.
    pub fn to_graph(&self) -> Graph {
        let n = self.n;
        let mut adj = vec![0u64; 2 * n];
        for (x, y) in self.edges() {
            adj[x - 1] |= 1 << (n + y - 1);
            adj[n + y - 1] |= 1 << (x - 1);
        }
        Graph { n: 2 * n, adj }
    }

    /// Splits a combined vertex id `1..=2n` into its side and 1-based index.
    pub fn split_id(&self, id: usize) -> Option<(Side, usize)> {
        match id {
            0 => None,
            i if i <= self.n => Some((Side::X, i)),
            i if i <= 2 * self.n => Some((Side::Y, i - self.n)),
            _ => None,
        }
    }

    pub fn combined_id(&self, side: Side, i: usize) -> usize {
        match side {
            Side::X => i,
            Side::Y => self.n + i,
        }
    }

    /// Human label for a combined vertex id: `x3`, `y1`.
    pub fn label(&self, id: usize) -> String {
        match self.split_id(id) {
            Some((Side::X, i)) => format!("x{i}"),
            Some((Side::Y, i)) => format!("y{i}"),
            None => format!("?{id}"),
        }
    }

    /// Parses `x3` / `y1` labels into combined ids.
    pub fn parse_label(&self, label: &str) -> Option<usize> {
        let (side, rest) = match label.as_bytes().first()? {
            b'x' | b'X' => (Side::X, &label[1..]),
            b'y' | b'Y' => (Side::Y, &label[1..]),
            _ => return None,
        };
        let i: usize = rest.parse().ok()?;
        (1..=self.n).contains(&i).then(|| self.combined_id(side, i))
    }

    pub(crate) fn x_masks(&self) -> &[u64] {
        &self.x_adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_directed_triangle() {
        let d = Digraph::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(d.arc_count(), 3);
        assert!(d.has_arc(3, 1));
        assert!(!d.has_arc(1, 3));
    }

    #[test]
    fn rejects_self_loop_and_out_of_range() {
        assert_eq!(
            Digraph::new(2, [(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            Digraph::new(2, [(1, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 2 })
        );
        assert_eq!(Digraph::new(0, []), Err(GraphError::EmptyVertexSet));
    }

    #[test]
    fn duplicate_arcs_collapse() {
        let d = Digraph::new(3, [(1, 2), (1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(d.arc_count(), 3);
        assert_eq!(d, Digraph::directed_cycle(3).unwrap());
    }

    #[test]
    fn degrees_of_small_digraphs() {
        let c3 = Digraph::directed_cycle(3).unwrap();
        assert!(c3
            .degrees()
            .iter()
            .all(|d| (d.out_degree, d.in_degree, d.total) == (1, 1, 2)));
        let k3 = Digraph::complete(3).unwrap();
        assert!(k3
            .degrees()
            .iter()
            .all(|d| (d.out_degree, d.in_degree, d.total) == (2, 2, 4)));
        let e3 = Digraph::empty(3).unwrap();
        assert!(e3.degrees().iter().all(|d| d.total == 0));
    }

    #[test]
    fn arcs_are_lexicographic() {
        let d = Digraph::new(3, [(3, 1), (1, 3), (2, 1), (1, 2)]).unwrap();
        assert_eq!(
            d.arcs().collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (2, 1), (3, 1)]
        );
    }

    #[test]
    fn undirected_edges_are_normalized() {
        let g = Graph::new(4, [(2, 1), (1, 2), (4, 3)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (3, 4)]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn bipartite_labels_round_trip() {
        let g = BipartiteGraph::new(3, [(1, 2)]).unwrap();
        for id in 1..=6 {
            assert_eq!(g.parse_label(&g.label(id)), Some(id));
        }
        assert_eq!(g.label(4), "y1");
        assert_eq!(g.parse_label("y4"), None);
        let plain = g.to_graph();
        assert!(plain.has_edge(1, 5));
    }
}

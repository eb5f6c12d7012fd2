//! Vertex × arc incidence matrices with entries in {−1, 0, +1}.
//!
//! Row `r` corresponds to vertex `r + 1`; columns follow the lexicographic
//! arc (or edge) order of the source graph. Digraph columns carry `+1` at
//! the tail and `−1` at the head.

use crate::cycle::CycleKind;
use crate::error::GraphError;
use crate::graph::{BipartiteGraph, Digraph, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    // column-major
    entries: Vec<i8>,
}

impl IncidenceMatrix {
    /// Builds a matrix from explicit columns. Every column must have `rows`
    /// entries drawn from {−1, 0, +1}.
    pub fn from_columns(rows: usize, columns: &[Vec<i8>]) -> Result<Self, String> {
        let mut entries = Vec::with_capacity(rows * columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(format!(
                    "column {c} has {} entries, expected {rows}",
                    col.len()
                ));
            }
            if let Some(bad) = col.iter().find(|e| !(-1..=1).contains(*e)) {
                return Err(format!("column {c} contains entry {bad}"));
            }
            entries.extend_from_slice(col);
        }
        Ok(Self {
            rows,
            cols: columns.len(),
            entries,
        })
    }

    fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    fn set(&mut self, row: usize, col: usize, value: i8) {
        self.entries[col * self.rows + row] = value;
    }

    /// The incidence matrix `C` of a digraph.
    pub fn of_digraph(d: &Digraph) -> Self {
        let mut m = Self::zeros(d.order(), d.arc_count());
        for (c, (u, v)) in d.arcs().enumerate() {
            m.set(u - 1, c, 1);
            m.set(v - 1, c, -1);
        }
        m
    }

    /// The unsigned incidence matrix of an undirected graph.
    pub fn of_graph(g: &Graph) -> Self {
        let mut m = Self::zeros(g.order(), g.edge_count());
        for (c, (u, v)) in g.edges().enumerate() {
            m.set(u - 1, c, 1);
            m.set(v - 1, c, 1);
        }
        m
    }

    /// The `2n`-row incidence matrix of a balanced bipartite graph: rows
    /// `0..n` are `x_1..x_n`, rows `n..2n` are `y_1..y_n`.
    pub fn of_bipartite(g: &BipartiteGraph) -> Self {
        let n = g.part_size();
        let mut m = Self::zeros(2 * n, g.edge_count());
        for (c, (x, y)) in g.edges().enumerate() {
            m.set(x - 1, c, 1);
            m.set(n + y - 1, c, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[col * self.rows + row]
    }

    pub fn column(&self, col: usize) -> &[i8] {
        &self.entries[col * self.rows..(col + 1) * self.rows]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[i8]> {
        (0..self.cols).map(move |c| self.column(c))
    }

    pub fn column_sums(&self) -> Vec<i32> {
        self.columns()
            .map(|c| c.iter().map(|&e| e as i32).sum())
            .collect()
    }

    /// Entrywise map, used for the sign split and negation.
    pub fn map(&self, f: impl Fn(i8) -> i8) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&e| f(e)).collect(),
        }
    }

    pub fn negated(&self) -> Self {
        self.map(|e| -e)
    }

    /// Entrywise sum; `None` on shape mismatch or if an entry leaves {−1, 0, +1}.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                let s = a + b;
                (-1..=1).contains(&s).then_some(s)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Places `bottom` under `self`. Column counts must agree.
    pub fn stack(&self, bottom: &Self) -> Option<Self> {
        if self.cols != bottom.cols {
            return None;
        }
        let rows = self.rows + bottom.rows;
        let mut entries = Vec::with_capacity(rows * self.cols);
        for c in 0..self.cols {
            entries.extend_from_slice(self.column(c));
            entries.extend_from_slice(bottom.column(c));
        }
        Some(Self {
            rows,
            cols: self.cols,
            entries,
        })
    }

    /// Keeps the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for &c in cols {
            entries.extend_from_slice(self.column(c));
        }
        Self {
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    /// Index of the first column that is not exactly one `+1` and one `−1`.
    pub fn first_non_digraph_column(&self) -> Option<usize> {
        (0..self.cols).find(|&c| !column_has(self.column(c), 1, 1))
    }

    /// Every column holds exactly one `+1` and one `−1`.
    pub fn is_digraph_form(&self) -> bool {
        self.first_non_digraph_column().is_none()
    }

    /// Every column holds exactly two `+1` entries.
    pub fn is_graph_form(&self) -> bool {
        self.columns().all(|c| column_has(c, 2, 0))
    }

    /// `2n` rows, each column with one `+1` among the first `n` rows and one
    /// `+1` among the last `n`.
    pub fn is_zmapping_form(&self) -> bool {
        if self.rows % 2 != 0 {
            return false;
        }
        let n = self.rows / 2;
        self.columns()
            .all(|c| column_has(&c[..n], 1, 0) && column_has(&c[n..], 1, 0))
    }

    /// Whether the columns form a single simple cycle, i.e. after dropping
    /// all-zero rows the matrix can be brought by row and column exchanges
    /// to the banded cycle form: `+1` on the diagonal with `−1` (directed)
    /// or `+1` (undirected) on the sub-diagonal and in the top-right corner.
    ///
    /// Directed cycles need at least two columns, undirected at least three.
    pub fn is_cycle_form(&self, kind: CycleKind) -> bool {
        let l = self.cols;
        let (plus, minus, min_len) = match kind {
            CycleKind::Directed => (1, 1, 2),
            CycleKind::Undirected => (2, 0, 3),
        };
        if l < min_len || !self.columns().all(|c| column_has(c, plus, minus)) {
            return false;
        }
        let live: Vec<usize> = (0..self.rows)
            .filter(|&r| (0..l).any(|c| self.get(r, c) != 0))
            .collect();
        if live.len() != l {
            return false;
        }
        for &r in &live {
            let row: Vec<i8> = (0..l).map(|c| self.get(r, c)).collect();
            if !column_has(&row, plus, minus) {
                return false;
            }
        }
        // Every row has degree two, so the support is a union of cycles;
        // it is a single cycle iff it is connected.
        let mut parent: Vec<usize> = (0..self.rows).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for c in 0..l {
            let ends: Vec<usize> = (0..self.rows).filter(|&r| self.get(r, c) != 0).collect();
            let (a, b) = (find(&mut parent, ends[0]), find(&mut parent, ends[1]));
            parent[a] = b;
        }
        let root = find(&mut parent, live[0]);
        live.iter().all(|&r| find(&mut parent, r) == root)
    }
}

fn column_has(entries: &[i8], plus: usize, minus: usize) -> bool {
    let mut p = 0;
    let mut m = 0;
    for &e in entries {
        match e {
            1 => p += 1,
            -1 => m += 1,
            _ => {}
        }
    }
    p == plus && m == minus
}

impl TryFrom<&IncidenceMatrix> for Digraph {
    type Error = GraphError;

    /// Reads arcs back out of a digraph-form matrix.
    fn try_from(m: &IncidenceMatrix) -> Result<Self, Self::Error> {
        if let Some(column) = m.first_non_digraph_column() {
            return Err(GraphError::NotDigraphIncidence { column });
        }
        let arcs = m.columns().map(|c| {
            let tail = c.iter().position(|&e| e == 1).unwrap_or(0);
            let head = c.iter().position(|&e| e == -1).unwrap_or(0);
            (tail + 1, head + 1)
        });
        Digraph::new(m.rows(), arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arc_column() {
        let d = Digraph::new(2, [(1, 2)]).unwrap();
        let c = IncidenceMatrix::of_digraph(&d);
        assert_eq!((c.rows(), c.cols()), (2, 1));
        assert_eq!(c.column(0), &[1, -1]);
    }

    #[test]
    fn empty_arc_set_gives_n_by_zero() {
        let c = IncidenceMatrix::of_digraph(&Digraph::empty(4).unwrap());
        assert_eq!((c.rows(), c.cols()), (4, 0));
        assert!(c.is_digraph_form());
    }

    #[test]
    fn triangle_matrix_is_banded_cycle() {
        let c = IncidenceMatrix::of_digraph(&Digraph::directed_cycle(3).unwrap());
        // arcs (1,2), (2,3), (3,1)
        assert_eq!(c.column(0), &[1, -1, 0]);
        assert_eq!(c.column(1), &[0, 1, -1]);
        assert_eq!(c.column(2), &[-1, 0, 1]);
        assert!(c.is_cycle_form(CycleKind::Directed));
        assert_eq!(c.column_sums(), vec![0, 0, 0]);
    }

    #[test]
    fn two_disjoint_digons_are_not_one_cycle() {
        let d = Digraph::new(4, [(1, 2), (2, 1), (3, 4), (4, 3)]).unwrap();
        let c = IncidenceMatrix::of_digraph(&d);
        assert!(!c.is_cycle_form(CycleKind::Directed));
        let first = c.select_columns(&[0, 1]);
        assert!(first.is_cycle_form(CycleKind::Directed));
    }

    #[test]
    fn undirected_cycle_form() {
        let g = Graph::new(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let m = IncidenceMatrix::of_graph(&g);
        assert!(m.is_graph_form());
        assert!(m.is_cycle_form(CycleKind::Undirected));
        assert!(!m
            .select_columns(&[0, 1, 2])
            .is_cycle_form(CycleKind::Undirected));
        assert_eq!(m.column_sums(), vec![2; 4]);
    }

    #[test]
    fn reads_digraph_back() {
        let d = Digraph::complete(3).unwrap();
        let c = IncidenceMatrix::of_digraph(&d);
        assert_eq!(Digraph::try_from(&c).unwrap(), d);
        let bad = IncidenceMatrix::from_columns(2, &[vec![1, 1]]).unwrap();
        assert_eq!(
            Digraph::try_from(&bad),
            Err(GraphError::NotDigraphIncidence { column: 0 })
        );
    }

    #[test]
    fn rejects_out_of_range_entries() {
        assert!(IncidenceMatrix::from_columns(2, &[vec![2, 0]]).is_err());
        assert!(IncidenceMatrix::from_columns(2, &[vec![1]]).is_err());
    }
}

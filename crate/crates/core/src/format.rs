//! Plain-text edge-list format.
//!
//! ```text
//! # optional comments
//! D 3
//! 1 2
//! 2 3
//! 3 1
//! ```
//!
//! The header is `D <n>` for a digraph (each line `u v` is the arc `u → v`),
//! `B <n>` for a balanced bipartite graph of part size `n` (each line `u v` is
//! the edge `x_u y_v`) or `G <n>` for an undirected graph. Lines starting
//! with `#` and blank lines are skipped. Vertices are 1-based.
//!
//! Writers emit the header followed by one line per arc/edge in
//! lexicographic order, LF-terminated, which is the normalized form.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::GraphError;
use crate::graph::{BipartiteGraph, Digraph, Graph};

/// Any graph the text format can carry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Instance {
    Digraph(Digraph),
    Bipartite(BipartiteGraph),
    Graph(Graph),
}

impl Instance {
    /// `n` as written in the header.
    pub fn order(&self) -> usize {
        match self {
            Instance::Digraph(d) => d.order(),
            Instance::Bipartite(g) => g.part_size(),
            Instance::Graph(g) => g.order(),
        }
    }

    pub fn to_edge_list(&self) -> String {
        match self {
            Instance::Digraph(d) => d.to_edge_list(),
            Instance::Bipartite(g) => g.to_edge_list(),
            Instance::Graph(g) => g.to_edge_list(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Instance::Digraph(_) => "digraph",
            Instance::Bipartite(_) => "bipartite",
            Instance::Graph(_) => "graph",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{source} at line {line}")]
    Invalid {
        line: usize,
        #[source]
        source: GraphError,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Invalid { line, .. } => *line,
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Copy)]
enum Header {
    D,
    B,
    G,
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), ParseError> {
    let mut toks = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = toks
            .next()
            .ok_or_else(|| syntax(line_no, format!("missing {what} endpoint")))?;
        tok.parse::<usize>()
            .map_err(|_| syntax(line_no, format!("expected a vertex index, found `{tok}`")))
    };
    let u = next("first")?;
    let v = next("second")?;
    if toks.next().is_some() {
        return Err(syntax(line_no, "expected exactly two indices"));
    }
    Ok((u, v))
}

/// Parses one instance. Each pair is validated as it is read so that errors
/// name the offending line.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| {
        syntax(
            text.lines().count().max(1),
            "missing `D <n>` / `B <n>` header",
        )
    })?;
    let mut toks = header.split_whitespace();
    let kind = match toks.next() {
        Some("D") => Header::D,
        Some("B") => Header::B,
        Some("G") => Header::G,
        Some(other) => {
            return Err(syntax(
                header_line,
                format!("unknown header `{other}`, expected D, B or G"),
            ))
        }
        None => return Err(syntax(header_line, "empty header")),
    };
    let n: usize = toks
        .next()
        .ok_or_else(|| syntax(header_line, "header is missing the vertex count"))?
        .parse()
        .map_err(|_| syntax(header_line, "vertex count is not a non-negative integer"))?;
    if toks.next().is_some() {
        return Err(syntax(header_line, "trailing tokens after header"));
    }
    let invalid = |line: usize| move |source: GraphError| ParseError::Invalid { line, source };

    match kind {
        Header::D => {
            let mut arcs = Vec::new();
            Digraph::empty(n).map_err(invalid(header_line))?;
            for (no, line) in lines {
                let (u, v) = parse_pair(no, line)?;
                Digraph::new(n, [(u, v)]).map_err(invalid(no))?;
                arcs.push((u, v));
            }
            Ok(Instance::Digraph(
                Digraph::new(n, arcs).map_err(invalid(header_line))?,
            ))
        }
        Header::B => {
            let mut edges = Vec::new();
            BipartiteGraph::new(n, []).map_err(invalid(header_line))?;
            for (no, line) in lines {
                let (u, v) = parse_pair(no, line)?;
                BipartiteGraph::new(n, [(u, v)]).map_err(invalid(no))?;
                edges.push((u, v));
            }
            Ok(Instance::Bipartite(
                BipartiteGraph::new(n, edges).map_err(invalid(header_line))?,
            ))
        }
        Header::G => {
            let mut edges = Vec::new();
            Graph::new(n, []).map_err(invalid(header_line))?;
            for (no, line) in lines {
                let (u, v) = parse_pair(no, line)?;
                Graph::new(n, [(u, v)]).map_err(invalid(no))?;
                edges.push((u, v));
            }
            Ok(Instance::Graph(
                Graph::new(n, edges).map_err(invalid(header_line))?,
            ))
        }
    }
}

fn render(tag: char, n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> String {
    let mut s = format!("{tag} {n}\n");
    for (u, v) in pairs {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

impl Digraph {
    pub fn to_edge_list(&self) -> String {
        render('D', self.order(), self.arcs())
    }
}

impl BipartiteGraph {
    pub fn to_edge_list(&self) -> String {
        render('B', self.part_size(), self.edges())
    }
}

impl Graph {
    pub fn to_edge_list(&self) -> String {
        render('G', self.order(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle_with_comments() {
        let text = "# a triangle\nD 3\n1 2\n\n# body comment\n2 3\n3 1\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst, Instance::Digraph(Digraph::directed_cycle(3).unwrap()));
        assert_eq!(inst.to_edge_list(), "D 3\n1 2\n2 3\n3 1\n");
    }

    #[test]
    fn self_loop_names_its_line() {
        let err = parse_instance("D 3\n1 2\n2 2\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Invalid {
                line: 3,
                source: GraphError::SelfLoop { vertex: 2 }
            }
        );
        assert!(err.to_string().starts_with("self-loop"));
        assert!(err.to_string().ends_with("at line 3"));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_instance(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(
            parse_instance("Q 3\n"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_instance("D 3\n1\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_instance("D 3\n1 2 3\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_instance("D x\n"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_instance("D 0\n"),
            Err(ParseError::Invalid {
                line: 1,
                source: GraphError::EmptyVertexSet
            })
        ));
        assert!(matches!(
            parse_instance("B 2\n1 3\n"),
            Err(ParseError::Invalid { line: 2, .. })
        ));
    }

    #[test]
    fn bipartite_allows_diagonal_edges() {
        let inst = parse_instance("B 2\n1 1\n2 1\n").unwrap();
        assert_eq!(inst.to_edge_list(), "B 2\n1 1\n2 1\n");
    }

    #[test]
    fn empty_arc_set() {
        let inst = parse_instance("D 4\n").unwrap();
        assert_eq!(inst.to_edge_list(), "D 4\n");
    }
}

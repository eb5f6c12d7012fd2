use std::fmt::Write;

use zham_core::BipartiteGraph;

/// DOT rendering with the x-part as boxes in a left column and the y-part as
/// circles in a right column.
pub fn render(g: &BipartiteGraph) -> String {
    let n = g.part_size();
    let mut s = String::from("graph Z {\n  rankdir=LR;\n  splines=false;\n");
    s.push_str("  subgraph cluster_x {\n    style=invis;\n    rank=same;\n");
    for i in 1..=n {
        let _ = writeln!(s, "    x{i} [shape=box];");
    }
    s.push_str("  }\n  subgraph cluster_y {\n    style=invis;\n    rank=same;\n");
    for i in 1..=n {
        let _ = writeln!(s, "    y{i} [shape=circle];");
    }
    s.push_str("  }\n");
    // Invisible rungs keep x_i level with y_i.
    for i in 1..=n {
        let _ = writeln!(s, "  x{i} -- y{i} [style=invis];");
    }
    for (x, y) in g.edges() {
        let _ = writeln!(s, "  x{x} -- y{y};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_edges() {
        let g = BipartiteGraph::new(2, [(1, 2)]).unwrap();
        let dot = render(&g);
        assert!(dot.contains("x1 [shape=box]"));
        assert!(dot.contains("y2 [shape=circle]"));
        assert!(dot.contains("  x1 -- y2;"));
        assert!(!dot.contains("  x2 -- y1;"));
    }
}

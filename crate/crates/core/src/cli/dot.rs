use std::fmt::Write;

use crate::pattern_graph::PatternGraph;

/// Graphviz rendering: solid edges `style=solid`, broken edges `style=dashed`.
pub fn to_dot(g: &PatternGraph, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "graph {name} {{").unwrap();
    writeln!(s, "  node [shape=circle];").unwrap();
    for v in 1..=g.n() + 1 {
        writeln!(s, "  {v};").unwrap();
    }
    for (u, v) in g.solid() {
        writeln!(s, "  {u} -- {v} [style=solid];").unwrap();
    }
    for (u, v) in g.broken() {
        writeln!(s, "  {u} -- {v} [style=dashed];").unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_styles() {
        let g = PatternGraph::new(3, [(1, 2), (2, 3)], [(1, 4)]).unwrap();
        let dot = to_dot(&g, "g0");
        assert_eq!(
            dot,
            "graph g0 {\n  node [shape=circle];\n  1;\n  2;\n  3;\n  4;\n  \
             1 -- 2 [style=solid];\n  2 -- 3 [style=solid];\n  1 -- 4 [style=dashed];\n}\n"
        );
    }
}

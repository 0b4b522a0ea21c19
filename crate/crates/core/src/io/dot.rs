//! Graphviz output (topology only).

use std::fmt::Write;

use crate::graph::Graph;

pub fn write(graphs: &[Graph]) -> String {
    let mut out = String::new();
    for (i, g) in graphs.iter().enumerate() {
        writeln!(out, "graph G{i} {{").unwrap();
        for v in 0..g.vertex_count() {
            writeln!(out, "  {v};").unwrap();
        }
        for (u, v) in g.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families::prism;
    use crate::graph::underlying_graph;

    #[test]
    fn cube_counts() {
        let text = write(&[underlying_graph(&prism(4))]);
        assert_eq!(text.matches(" -- ").count(), 12);
        assert_eq!(text.lines().filter(|l| l.ends_with(';') && !l.contains("--")).count(), 8);
    }
}

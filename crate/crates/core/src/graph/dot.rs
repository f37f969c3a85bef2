use super::{CliqueReport, ColoredGraph};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz text for the graph. Vertices appear in graph order, edges in
/// lexicographic index order, and monochromatic triangles as trailing
/// comments, so identical input yields identical bytes.
pub fn export_dot(g: &ColoredGraph, report: &CliqueReport) -> String {
    let mut out = String::from("graph commutation {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {};\n", quote(v)));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  {} -- {} [color={}];\n",
            quote(&g.vertices()[e.a]),
            quote(&g.vertices()[e.b]),
            e.color
        ));
    }
    for (color, ts) in [("red", &report.red_triangles), ("green", &report.green_triangles)] {
        for t in ts {
            out.push_str(&format!("  // {color} triangle: {}\n", t.join(" ")));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::graph::{build_graph, clique_report};

    fn edge_lines(dot: &str) -> Vec<&str> {
        dot.lines().filter(|l| l.contains(" -- ")).collect()
    }

    #[test]
    fn two_commuting_coordinates() {
        let g = build_graph(&["x", "y"], &Catalog::new()).unwrap();
        let dot = export_dot(&g, &clique_report(&g));
        assert_eq!(edge_lines(&dot), vec!["  \"x\" -- \"y\" [color=red];"]);
    }

    #[test]
    fn angular_triangle_is_green_and_stable() {
        let g = build_graph(&["l_x", "l_y", "l_z"], &Catalog::new()).unwrap();
        let dot = export_dot(&g, &clique_report(&g));
        let lines = edge_lines(&dot);
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().all(|l| l.ends_with("[color=green];")));
        assert_eq!(dot, export_dot(&g, &clique_report(&g)));
        assert!(dot.contains("// green triangle: l_x l_y l_z"));
    }
}

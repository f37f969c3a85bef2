use serde::Serialize;

use super::ColoredGraph;
use crate::catalog::EdgeColor;

/// Monochromatic triangles as ascending index triples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Triangles {
    pub red: Vec<[usize; 3]>,
    pub green: Vec<[usize; 3]>,
}

/// Exhaustive scan of all `C(n, 3)` triples.
pub fn monochromatic_triangles(g: &ColoredGraph) -> Triangles {
    let n = g.len();
    let mut out = Triangles::default();
    for i in 0..n {
        for j in i + 1..n {
            let c = g.color(i, j);
            for k in j + 1..n {
                if g.color(i, k) == c && g.color(j, k) == c {
                    match c {
                        EdgeColor::Red => out.red.push([i, j, k]),
                        EdgeColor::Green => out.green.push([i, j, k]),
                    }
                }
            }
        }
    }
    out
}

fn bron_kerbosch(g: &ColoredGraph, color: EdgeColor, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    // pivot: the vertex of P ∪ X with the most neighbors in P
    let px = p | x;
    let pivot = (0..g.len())
        .filter(|v| px >> v & 1 == 1)
        .max_by_key(|&v| (g.neighbors(v, color) & p).count_ones())
        .unwrap();
    let mut todo = p & !g.neighbors(pivot, color);
    while todo != 0 {
        let v = todo.trailing_zeros() as usize;
        todo &= todo - 1;
        let nv = g.neighbors(v, color);
        bron_kerbosch(g, color, r | 1 << v, p & nv, x & nv, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// All maximal cliques of the given color with at least two vertices, as
/// ascending index lists in lexicographic order.
pub fn max_monochromatic_cliques(g: &ColoredGraph, color: EdgeColor) -> Vec<Vec<usize>> {
    let mut masks = Vec::new();
    bron_kerbosch(g, color, 0, g.all_mask(), 0, &mut masks);
    let mut cliques: Vec<Vec<usize>> = masks
        .into_iter()
        .filter(|m| m.count_ones() >= 2)
        .map(|m| (0..g.len()).filter(|v| m >> v & 1 == 1).collect())
        .collect();
    cliques.sort();
    cliques
}

/// Monochromatic triangles and maximal cliques, by vertex name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CliqueReport {
    pub red_triangles: Vec<[String; 3]>,
    pub green_triangles: Vec<[String; 3]>,
    pub max_red_cliques: Vec<Vec<String>>,
    pub max_green_cliques: Vec<Vec<String>>,
}

impl CliqueReport {
    pub fn triangle_count(&self) -> usize {
        self.red_triangles.len() + self.green_triangles.len()
    }
}

pub fn clique_report(g: &ColoredGraph) -> CliqueReport {
    let name = |i: usize| g.vertices()[i].clone();
    let tri = |ts: Vec<[usize; 3]>| ts.into_iter().map(|t| t.map(name)).collect();
    let cl = |cs: Vec<Vec<usize>>| {
        cs.into_iter()
            .map(|c| c.into_iter().map(name).collect())
            .collect()
    };
    let t = monochromatic_triangles(g);
    CliqueReport {
        red_triangles: tri(t.red),
        green_triangles: tri(t.green),
        max_red_cliques: cl(max_monochromatic_cliques(g, EdgeColor::Red)),
        max_green_cliques: cl(max_monochromatic_cliques(g, EdgeColor::Green)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::graph::build_graph;

    #[test]
    fn four_vertex_graph_without_triangles() {
        let g = build_graph(&["p_x", "p_y", "x", "y"], &Catalog::new()).unwrap();
        assert_eq!(monochromatic_triangles(&g), Triangles::default());
    }

    #[test]
    fn all_green_triangle_has_no_red_cliques() {
        let g = build_graph(&["l_x", "l_y", "l_z"], &Catalog::new()).unwrap();
        assert!(max_monochromatic_cliques(&g, EdgeColor::Red).is_empty());
        assert_eq!(max_monochromatic_cliques(&g, EdgeColor::Green), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn commuting_momenta_form_one_clique() {
        let g = build_graph(&["p_x", "p_y", "p_z"], &Catalog::new()).unwrap();
        assert_eq!(max_monochromatic_cliques(&g, EdgeColor::Red), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn monochromatic_k6_has_twenty_triangles() {
        let names = (0..6).map(|i| format!("v{i}")).collect();
        let g = ColoredGraph::from_coloring(names, |_, _| EdgeColor::Red).unwrap();
        let t = monochromatic_triangles(&g);
        assert_eq!((t.red.len(), t.green.len()), (20, 0));
        assert_eq!(max_monochromatic_cliques(&g, EdgeColor::Red), vec![(0..6).collect::<Vec<_>>()]);
        assert!(max_monochromatic_cliques(&g, EdgeColor::Green).is_empty());
    }

    #[test]
    fn green_edge_pairs_are_cliques() {
        // a single green edge in an otherwise red K3
        let names = vec!["a".into(), "b".into(), "c".into()];
        let g = ColoredGraph::from_coloring(names, |i, j| {
            if (i, j) == (0, 1) {
                EdgeColor::Green
            } else {
                EdgeColor::Red
            }
        })
        .unwrap();
        assert_eq!(max_monochromatic_cliques(&g, EdgeColor::Green), vec![vec![0, 1]]);
        assert_eq!(max_monochromatic_cliques(&g, EdgeColor::Red), vec![vec![0, 2], vec![1, 2]]);
    }
}

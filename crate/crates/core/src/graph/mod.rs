//! Complete two-colored commutation graphs and their monochromatic
//! substructures.

mod audit;
mod cliques;
mod dot;
mod ramsey;

pub use audit::{audit, parse_claims, Claim, ClaimKind, ClaimsError, Discrepancy, DiscrepancyReport, Verdict};
pub use cliques::{clique_report, max_monochromatic_cliques, monochromatic_triangles, CliqueReport, Triangles};
pub use dot::export_dot;
pub use ramsey::{k5_pentagon, verify_r33, K5Witness, RamseyCertificate};

use std::collections::HashSet;

use serde::Serialize;

use crate::catalog::{Basis, Catalog, CatalogError, EdgeColor, ObservableSpec};

/// Adjacency is stored as `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("a graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("at most {MAX_VERTICES} vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("duplicate vertex `{0}`")]
    Duplicate(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub color: EdgeColor,
    pub basis: Basis,
    pub citation: String,
}

/// Complete graph with every edge colored red (commuting) or green.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    vertices: Vec<String>,
    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    edges: Vec<Edge>,
    red: Vec<u64>,
}

impl ColoredGraph {
    fn check_vertices(vertices: &[String]) -> Result<(), GraphError> {
        let n = vertices.len();
        if n < 2 {
            return Err(GraphError::TooFewVertices(n));
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut seen = HashSet::new();
        for v in vertices {
            if !seen.insert(v.as_str()) {
                return Err(GraphError::Duplicate(v.clone()));
            }
        }
        Ok(())
    }

    /// Builds the graph from already-classified edges. `classify(i, j)` is
    /// called once per pair with `i < j`.
    pub fn try_from_fn<F, E>(vertices: Vec<String>, mut classify: F) -> Result<Self, E>
    where
        F: FnMut(usize, usize) -> Result<(EdgeColor, Basis, String), E>,
        E: From<GraphError>,
    {
        Self::check_vertices(&vertices)?;
        let n = vertices.len();
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        let mut red = vec![0u64; n];
        for i in 0..n {
            for j in i + 1..n {
                let (color, basis, citation) = classify(i, j)?;
                if color == EdgeColor::Red {
                    red[i] |= 1 << j;
                    red[j] |= 1 << i;
                }
                edges.push(Edge {
                    a: i,
                    b: j,
                    color,
                    basis,
                    citation,
                });
            }
        }
        Ok(Self { vertices, edges, red })
    }

    /// An abstract coloring with no operator content.
    pub fn from_coloring<F>(vertices: Vec<String>, mut color: F) -> Result<Self, GraphError>
    where
        F: FnMut(usize, usize) -> EdgeColor,
    {
        Self::try_from_fn(vertices, |i, j| {
            Ok::<_, GraphError>((color(i, j), Basis::Declared, "abstract coloring".to_string()))
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Panics if `i == j` or either index is out of range.
    pub fn edge(&self, i: usize, j: usize) -> &Edge {
        assert!(i != j, "no self edges");
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let n = self.vertices.len();
        &self.edges[i * n - i * (i + 1) / 2 + (j - i - 1)]
    }

    pub fn color(&self, i: usize, j: usize) -> EdgeColor {
        if self.red[i] >> j & 1 == 1 {
            EdgeColor::Red
        } else {
            EdgeColor::Green
        }
    }

    /// Neighbor bitmask of `i` in the given color.
    pub fn neighbors(&self, i: usize, color: EdgeColor) -> u64 {
        match color {
            EdgeColor::Red => self.red[i],
            EdgeColor::Green => !self.red[i] & self.all_mask() & !(1 << i),
        }
    }

    pub(crate) fn all_mask(&self) -> u64 {
        if self.vertices.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertices.len()) - 1
        }
    }
}

/// Builds the commutation graph over `names` in the given order.
pub fn build_graph<S: AsRef<str>>(names: &[S], catalog: &Catalog) -> Result<ColoredGraph, GraphError> {
    let specs = names
        .iter()
        .map(|n| catalog.resolve(n.as_ref()))
        .collect::<Result<Vec<_>, _>>()?;
    build_graph_from_specs(&specs, catalog)
}

/// Builds the commutation graph over resolved observables.
pub fn build_graph_from_specs(specs: &[ObservableSpec], catalog: &Catalog) -> Result<ColoredGraph, GraphError> {
    let vertices = specs.iter().map(|s| s.name.clone()).collect();
    ColoredGraph::try_from_fn(vertices, |i, j| {
        let c = catalog.classify(&specs[i], &specs[j])?;
        Ok::<_, GraphError>((c.color, c.basis, c.citation))
    })
}

/// JSON report; field order is part of the output format.
#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    pub red_triangles: Vec<[String; 3]>,
    pub green_triangles: Vec<[String; 3]>,
    pub max_red_cliques: Vec<Vec<String>>,
    pub max_green_cliques: Vec<Vec<String>>,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeRecord {
    pub a: String,
    pub b: String,
    pub color: EdgeColor,
    pub basis: Basis,
    pub citation: String,
}

impl GraphReport {
    pub fn new(g: &ColoredGraph, cliques: &CliqueReport, discrepancies: Option<&DiscrepancyReport>) -> Self {
        Self {
            vertices: g.vertices.clone(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    a: g.vertices[e.a].clone(),
                    b: g.vertices[e.b].clone(),
                    color: e.color,
                    basis: e.basis,
                    citation: e.citation.clone(),
                })
                .collect(),
            red_triangles: cliques.red_triangles.clone(),
            green_triangles: cliques.green_triangles.clone(),
            max_red_cliques: cliques.max_red_cliques.clone(),
            max_green_cliques: cliques.max_green_cliques.clone(),
            discrepancies: discrepancies.map(|d| d.claims.clone()).unwrap_or_default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colors(g: &ColoredGraph) -> Vec<(String, String, EdgeColor)> {
        g.edges()
            .iter()
            .map(|e| (g.vertices()[e.a].clone(), g.vertices()[e.b].clone(), e.color))
            .collect()
    }

    fn e(a: &str, b: &str, c: EdgeColor) -> (String, String, EdgeColor) {
        (a.into(), b.into(), c)
    }

    #[test]
    fn momentum_momentum_angular() {
        use EdgeColor::*;
        let g = build_graph(&["p_x", "p_y", "l_x"], &Catalog::new()).unwrap();
        assert_eq!(
            colors(&g),
            vec![e("p_x", "p_y", Red), e("p_x", "l_x", Red), e("p_y", "l_x", Green)]
        );
    }

    #[test]
    fn angular_components_are_all_green() {
        let g = build_graph(&["l_x", "l_y", "l_z"], &Catalog::new()).unwrap();
        assert!(g.edges().iter().all(|e| e.color == EdgeColor::Green));
    }

    #[test]
    fn k6_green_edges_form_the_axis_matching() {
        let g = build_graph(&["p_x", "p_y", "p_z", "x", "y", "z"], &Catalog::new()).unwrap();
        let green: Vec<_> = colors(&g).into_iter().filter(|c| c.2 == EdgeColor::Green).collect();
        assert_eq!(
            green,
            vec![
                e("p_x", "x", EdgeColor::Green),
                e("p_y", "y", EdgeColor::Green),
                e("p_z", "z", EdgeColor::Green)
            ]
        );
        assert_eq!(g.edges().len(), 15);
    }

    #[test]
    fn construction_errors() {
        let cat = Catalog::new();
        assert_eq!(build_graph(&["x"], &cat), Err(GraphError::TooFewVertices(1)));
        assert_eq!(build_graph(&["x", "px", "p_x"], &cat), Err(GraphError::Duplicate("p_x".into())));
        assert!(matches!(
            build_graph(&["x", "q"], &cat),
            Err(GraphError::Catalog(CatalogError::Unknown(_)))
        ));
    }

    #[test]
    fn edge_lookup_is_symmetric() {
        let g = build_graph(&["p_x", "p_y", "l_x", "x"], &Catalog::new()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert_eq!(g.edge(i, j).color, g.color(i, j));
                    assert_eq!(g.color(i, j), g.color(j, i));
                }
            }
        }
    }
}

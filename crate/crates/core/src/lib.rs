//! Exact commutation analysis of quantum observables as two-colored
//! complete graphs.
//!
//! Observables are vertices; a pair is joined by a **red** edge when the
//! operators commute and a **green** edge when they do not. The crate
//! derives those colors exactly from the canonical commutation relation,
//! finds monochromatic triangles and maximal cliques, certifies that every
//! two-coloring of K6 has a monochromatic triangle, checks the Jacobi
//! identity over operator triples, cross-validates verdicts with finite
//! matrices, and evaluates multi-slit interference patterns.
//!
//! ```
//! use qramsey::catalog::{Catalog, EdgeColor};
//! use qramsey::graph::{build_graph, clique_report};
//!
//! let catalog = Catalog::new();
//! let g = build_graph(&["p_x", "p_y", "p_z", "x", "y", "z"], &catalog).unwrap();
//! let report = clique_report(&g);
//! assert!(report.green_triangles.is_empty());
//! assert_eq!(report.red_triangles.len(), 8);
//! assert_eq!(g.color(0, 3), EdgeColor::Green); // [p_x, x] = -iħ
//! ```
//!
//! Modules:
//!
//! * [`weyl`]: normal-ordered polynomials, products, commutators, adjoints.
//! * [`oplang`]: text syntax for custom observables.
//! * [`catalog`]: observable registry, declared rule table, classifier.
//! * [`graph`]: colored graphs, cliques, the R(3,3) certificate, claim audits, DOT.
//! * [`jacobi`]: Jacobi-identity hypergraph.
//! * [`oracle`]: truncated-oscillator matrix check.
//! * [`interference`]: multi-slit patterns with decoherence and correlations.
//! * [`fixtures`]: the built-in figure graphs and their claims.

pub mod catalog;
pub mod fixtures;
pub mod graph;
pub mod interference;
pub mod jacobi;
pub mod oplang;
pub mod oracle;
pub mod weyl;

//! Jacobi-identity hypergraph over observable triples.

use serde::Serialize;

use crate::catalog::{Catalog, CatalogError, ObservableSpec};
use crate::weyl::{commutator, OperatorPoly};

/// `[A,[B,C]] + [B,[C,A]] + [C,[A,B]]`.
pub fn jacobi_residual(a: &OperatorPoly, b: &OperatorPoly, c: &OperatorPoly) -> OperatorPoly {
    let t1 = commutator(a, &commutator(b, c));
    let t2 = commutator(b, &commutator(c, a));
    let t3 = commutator(c, &commutator(a, b));
    &(&t1 + &t2) + &t3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum JacobiStatus {
    Holds,
    Fails,
    /// Some participant has no symbolic form.
    Unverifiable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyperedge {
    pub triple: [String; 3],
    pub status: JacobiStatus,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct JacobiCounts {
    pub holds: usize,
    pub fails: usize,
    pub unverifiable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiHypergraph {
    pub vertices: Vec<String>,
    pub hyperedges: Vec<Hyperedge>,
    pub counts: JacobiCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JacobiError {
    #[error("a Jacobi hypergraph needs at least 3 operators, got {0}")]
    TooFew(usize),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Status of one triple of resolved observables.
pub fn triple_status(a: &ObservableSpec, b: &ObservableSpec, c: &ObservableSpec) -> JacobiStatus {
    let (Some(pa), Some(pb), Some(pc)) = (a.poly(), b.poly(), c.poly()) else {
        return JacobiStatus::Unverifiable;
    };
    if a.particle != b.particle || b.particle != c.particle {
        // an operator on its own particle commutes with both others, which
        // makes every nested commutator vanish
        return JacobiStatus::Holds;
    }
    if jacobi_residual(pa, pb, pc).is_zero() {
        JacobiStatus::Holds
    } else {
        JacobiStatus::Fails
    }
}

pub fn build_jacobi_hypergraph_from_specs(specs: &[ObservableSpec]) -> Result<JacobiHypergraph, JacobiError> {
    let n = specs.len();
    if n < 3 {
        return Err(JacobiError::TooFew(n));
    }
    let mut hyperedges = Vec::with_capacity(n * (n - 1) * (n - 2) / 6);
    let mut counts = JacobiCounts::default();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let status = triple_status(&specs[i], &specs[j], &specs[k]);
                match status {
                    JacobiStatus::Holds => counts.holds += 1,
                    JacobiStatus::Fails => counts.fails += 1,
                    JacobiStatus::Unverifiable => counts.unverifiable += 1,
                }
                hyperedges.push(Hyperedge {
                    triple: [specs[i].name.clone(), specs[j].name.clone(), specs[k].name.clone()],
                    status,
                });
            }
        }
    }
    Ok(JacobiHypergraph {
        vertices: specs.iter().map(|s| s.name.clone()).collect(),
        hyperedges,
        counts,
    })
}

/// One hyperedge per unordered triple of `names`.
pub fn build_jacobi_hypergraph<S: AsRef<str>>(names: &[S], catalog: &Catalog) -> Result<JacobiHypergraph, JacobiError> {
    let specs = names
        .iter()
        .map(|n| catalog.resolve(n.as_ref()))
        .collect::<Result<Vec<_>, _>>()?;
    build_jacobi_hypergraph_from_specs(&specs)
}

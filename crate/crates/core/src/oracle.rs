//! Numerical cross-check of commutation verdicts.
//!
//! Operators are realized as matrices in a truncated three-dimensional
//! harmonic-oscillator basis (ℏ = m = ω = 1) through the ladder substitution
//! `x = (a† + a)/√2`, `p = i(a† − a)/√2`, with the tensor order `x ⊗ y ⊗ z`.
//! Truncation breaks the CCR near the top of the basis, so comparisons are
//! restricted to the interior levels `0..=N−D−2` per axis, where `D` is the
//! combined degree; there every truncated product equals the exact operator.

use ndarray::{s, Array2};
use num_complex::Complex64;
use serde::Serialize;

use crate::catalog::{Catalog, CatalogError, EdgeColor};
use crate::weyl::{commutator, Axis, Generator, OperatorPoly};

/// Smallest supported truncation per axis.
pub const MIN_DIM: usize = 4;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("truncation N={n} too small: degree {degree} needs N >= {required}")]
    TooSmall { n: usize, degree: u32, required: usize },
    #[error("observable `{0}` has no polynomial form")]
    NotSymbolic(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// One term `c · F_x ⊗ F_y ⊗ F_z`.
#[derive(Clone, Debug)]
struct KronTerm {
    coef: Complex64,
    factors: [Array2<Complex64>; 3],
}

#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub dim_per_axis: usize,
    pub degree: u32,
    /// Dense `N³ × N³` matrix.
    pub matrix: Array2<Complex64>,
    terms: Vec<KronTerm>,
}

fn position(n: usize) -> Array2<Complex64> {
    let mut m = Array2::zeros((n, n));
    for k in 1..n {
        let v = Complex64::new((k as f64 / 2.0).sqrt(), 0.0);
        m[[k - 1, k]] = v;
        m[[k, k - 1]] = v;
    }
    m
}

fn momentum(n: usize) -> Array2<Complex64> {
    // i(a† − a)/√2: (a†)[k, k−1] = √k, a[k−1, k] = √k
    let mut m = Array2::zeros((n, n));
    for k in 1..n {
        let v = (k as f64 / 2.0).sqrt();
        m[[k, k - 1]] = Complex64::new(0.0, v);
        m[[k - 1, k]] = Complex64::new(0.0, -v);
    }
    m
}

fn matrix_power(m: &Array2<Complex64>, k: u32) -> Array2<Complex64> {
    let mut out = Array2::eye(m.nrows());
    for _ in 0..k {
        out = out.dot(m);
    }
    out
}

fn check_dim(n: usize, degree: u32) -> Result<(), OracleError> {
    let required = (degree as usize + 2).max(MIN_DIM);
    if n < required {
        return Err(OracleError::TooSmall { n, degree, required });
    }
    Ok(())
}

fn kron_terms(a: &OperatorPoly, n: usize) -> Vec<KronTerm> {
    let (x, p) = (position(n), momentum(n));
    a.terms()
        .map(|(m, s)| KronTerm {
            coef: s.eval_unit_hbar(),
            factors: Axis::ALL.map(|axis| {
                let xa = m.exponent(Generator::Coordinate(axis));
                let pa = m.exponent(Generator::Momentum(axis));
                matrix_power(&x, xa).dot(&matrix_power(&p, pa))
            }),
        })
        .collect()
}

/// Dense sum of Kronecker terms, each factor restricted to its leading
/// `keep × keep` block.
fn densify(terms: &[KronTerm], keep: usize) -> Array2<Complex64> {
    let dim = keep.pow(3);
    let mut out = Array2::zeros((dim, dim));
    for t in terms {
        let f = t.factors.each_ref().map(|f| f.slice(s![..keep, ..keep]).to_owned());
        let block = ndarray::linalg::kron(&ndarray::linalg::kron(&f[0], &f[1]), &f[2]);
        out.scaled_add(t.coef, &block);
    }
    out
}

/// Matrix of `a` under the ladder substitution. Requires `n >= degree + 2`.
pub fn matrix_rep(a: &OperatorPoly, n: usize) -> Result<MatrixRep, OracleError> {
    let degree = a.degree();
    check_dim(n, degree)?;
    let terms = kron_terms(a, n);
    Ok(MatrixRep {
        dim_per_axis: n,
        degree,
        matrix: densify(&terms, n),
        terms,
    })
}

/// Levels per axis that are free of truncation effects for combined degree `d`.
pub fn interior_levels(n: usize, d: u32) -> usize {
    n.saturating_sub(d as usize + 1)
}

/// Restriction of a dense `N³ × N³` matrix to the interior product subspace.
pub fn project_interior(m: &Array2<Complex64>, n: usize, keep: usize) -> Array2<Complex64> {
    let idx: Vec<usize> = (0..keep.pow(3))
        .map(|f| {
            let (ix, iy, iz) = (f / (keep * keep), (f / keep) % keep, f % keep);
            (ix * n + iy) * n + iz
        })
        .collect();
    Array2::from_shape_fn((idx.len(), idx.len()), |(r, c)| m[[idx[r], idx[c]]])
}

fn max_abs(m: &Array2<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

impl MatrixRep {
    /// Max deviation from Hermiticity on the interior levels for this
    /// operator's degree.
    pub fn hermitian_defect(&self) -> f64 {
        let keep = interior_levels(self.dim_per_axis, self.degree);
        let p = densify(&self.terms, keep);
        let adj = p.t().mapv(|z| z.conj());
        max_abs(&(&p - &adj))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CommutatorCheck {
    /// Max entry of `P([M_A, M_B] − M_[A,B])P`.
    pub defect: f64,
    /// Max entry of the projected numeric commutator.
    pub magnitude: f64,
    /// Red iff the projected numeric commutator vanishes within `tol`.
    pub color: EdgeColor,
}

/// Projected numeric commutator `P[M_A, M_B]P`.
pub fn projected_commutator(a: &OperatorPoly, b: &OperatorPoly, n: usize) -> Result<Array2<Complex64>, OracleError> {
    let d = a.degree() + b.degree();
    check_dim(n, d)?;
    let keep = interior_levels(n, d);
    let (ta, tb) = (kron_terms(a, n), kron_terms(b, n));
    let mut terms = Vec::with_capacity(2 * ta.len() * tb.len());
    for u in &ta {
        for v in &tb {
            let ab = [0, 1, 2].map(|k| u.factors[k].dot(&v.factors[k]));
            let ba = [0, 1, 2].map(|k| v.factors[k].dot(&u.factors[k]));
            terms.push(KronTerm { coef: u.coef * v.coef, factors: ab });
            terms.push(KronTerm { coef: -u.coef * v.coef, factors: ba });
        }
    }
    Ok(densify(&terms, keep))
}

pub fn numeric_commutator_defect(a: &OperatorPoly, b: &OperatorPoly, n: usize, tol: f64) -> Result<CommutatorCheck, OracleError> {
    let numeric = projected_commutator(a, b, n)?;
    let keep = interior_levels(n, a.degree() + b.degree());
    let symbolic = densify(&kron_terms(&commutator(a, b), n), keep);
    let magnitude = max_abs(&numeric);
    Ok(CommutatorCheck {
        defect: max_abs(&(&numeric - &symbolic)),
        magnitude,
        color: EdgeColor::from_commutes(magnitude <= tol),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairAgreement {
    pub a: String,
    pub b: String,
    pub symbolic: EdgeColor,
    pub numeric: EdgeColor,
    pub defect: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AgreementReport {
    pub pairs: Vec<PairAgreement>,
    pub mismatches: usize,
}

impl AgreementReport {
    pub fn max_defect(&self) -> f64 {
        self.pairs.iter().map(|p| p.defect).fold(0.0, f64::max)
    }
}

/// Compares symbolic and numeric verdicts for every pair of `names`.
/// Disagreements are counted in the report, not raised as errors.
pub fn agreement_check<S: AsRef<str>>(names: &[S], catalog: &Catalog, n: usize, tol: f64) -> Result<AgreementReport, OracleError> {
    let specs = names
        .iter()
        .map(|name| {
            let spec = catalog.resolve(name.as_ref())?;
            if spec.poly().is_none() {
                return Err(OracleError::NotSymbolic(spec.name));
            }
            Ok(spec)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut pairs = Vec::new();
    for i in 0..specs.len() {
        for j in i + 1..specs.len() {
            let (a, b) = (&specs[i], &specs[j]);
            let symbolic = catalog.classify(a, b)?.color;
            let check = numeric_commutator_defect(a.poly().unwrap(), b.poly().unwrap(), n, tol)?;
            pairs.push(PairAgreement {
                a: a.name.clone(),
                b: b.name.clone(),
                symbolic,
                numeric: check.color,
                defect: check.defect,
            });
        }
    }
    let mismatches = pairs.iter().filter(|p| p.symbolic != p.numeric).count();
    Ok(AgreementReport { pairs, mismatches })
}

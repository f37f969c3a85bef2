use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::One;

use super::scalar::{fmt_piece, fmt_signed_sum, signed_pieces, GaussianRational, Scalar};

/// Spatial axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> &'static str {
        ["x", "y", "z"][self.index()]
    }
}

/// One of the six Weyl-algebra generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Coordinate(Axis),
    Momentum(Axis),
}

impl Generator {
    /// All generators in canonical order `x, y, z, px, py, pz`.
    pub const ALL: [Generator; 6] = [
        Generator::Coordinate(Axis::X),
        Generator::Coordinate(Axis::Y),
        Generator::Coordinate(Axis::Z),
        Generator::Momentum(Axis::X),
        Generator::Momentum(Axis::Y),
        Generator::Momentum(Axis::Z),
    ];

    /// Slot in the exponent vector.
    pub fn slot(self) -> usize {
        match self {
            Generator::Coordinate(a) => a.index(),
            Generator::Momentum(a) => 3 + a.index(),
        }
    }

    pub fn axis(self) -> Axis {
        match self {
            Generator::Coordinate(a) | Generator::Momentum(a) => a,
        }
    }

    /// Name as written in operator expressions.
    pub fn symbol(self) -> &'static str {
        ["x", "y", "z", "px", "py", "pz"][self.slot()]
    }
}

/// A normal-ordered monomial `x^a y^b z^c px^d py^e pz^f`.
///
/// Coordinates always stand left of momenta; generators on different axes
/// commute, so the exponent vector alone determines the operator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial([u32; 6]);

impl Monomial {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(exponents: [u32; 6]) -> Self {
        Self(exponents)
    }

    pub fn generator(g: Generator) -> Self {
        let mut e = [0; 6];
        e[g.slot()] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> [u32; 6] {
        self.0
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.0[g.slot()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_identity(&self) -> bool {
        self.0 == [0; 6]
    }

    /// Coordinate-only part.
    pub fn coordinate_part(&self) -> Monomial {
        Monomial([self.0[0], self.0[1], self.0[2], 0, 0, 0])
    }

    /// Momentum-only part.
    pub fn momentum_part(&self) -> Monomial {
        Monomial([0, 0, 0, self.0[3], self.0[4], self.0[5]])
    }

    fn factor_strings(&self) -> Vec<String> {
        Generator::ALL
            .iter()
            .filter_map(|g| match self.exponent(*g) {
                0 => None,
                1 => Some(g.symbol().to_string()),
                n => Some(format!("{}^{n}", g.symbol())),
            })
            .collect()
    }
}

/// Exact element of the Weyl algebra in normal-ordered form.
///
/// Stored coefficients are never zero, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OperatorPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl OperatorPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(s: Scalar) -> Self {
        Self::term(s, Monomial::identity())
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(Scalar::one(), Monomial::generator(g))
    }

    pub fn term(s: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(m, s);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total degree in the generators (0 for constants and zero).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The scalar value if the polynomial has no generator content.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::identity()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, s: &Scalar) -> OperatorPoly {
        let mut out = OperatorPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &(c * s));
        }
        out
    }

    fn add_term(&mut self, m: Monomial, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        slot.add_assign_ref(s);
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Formal adjoint: reverse every word, conjugate coefficients, and
    /// re-normal-order. Generators are self-adjoint.
    pub fn adjoint(&self) -> OperatorPoly {
        let mut out = OperatorPoly::zero();
        for (m, c) in &self.terms {
            let reversed = mul_monomials(&m.momentum_part(), &m.coordinate_part());
            out = &out + &reversed.scale(&c.conj());
        }
        out
    }
}

/// Exact `Σ sᵢ·Aᵢ`.
pub fn linear_combine<'a, I>(pairs: I) -> OperatorPoly
where
    I: IntoIterator<Item = (&'a Scalar, &'a OperatorPoly)>,
{
    let mut out = OperatorPoly::zero();
    for (s, a) in pairs {
        for (m, c) in &a.terms {
            out.add_term(*m, &(c * s));
        }
    }
    out
}

/// `(-i)^k` as an exact Gaussian rational.
fn minus_i_pow(k: u32) -> GaussianRational {
    let (re, im) = match k % 4 {
        0 => (1, 0),
        1 => (0, -1),
        2 => (-1, 0),
        _ => (0, 1),
    };
    Complex::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Expansion of `p^b · x^c` on one axis:
/// `Σ_k k!·C(b,k)·C(c,k)·(−iℏ)^k · x^{c−k} p^{b−k}`.
/// Entries are `(integer weight, k)`.
fn reorder_weights(b: u32, c: u32) -> Vec<(BigInt, u32)> {
    (0..=b.min(c))
        .map(|k| (factorial(k) * binomial(b, k) * binomial(c, k), k))
        .collect()
}

/// Normal-ordered product of two monomials.
fn mul_monomials(left: &Monomial, right: &Monomial) -> OperatorPoly {
    // Per axis: x^a p^b · x^c p^d. Axes are independent tensor factors, so the
    // full product is the cartesian product of the per-axis expansions.
    let mut partial: Vec<(BigInt, u32, [u32; 6])> = vec![(BigInt::one(), 0, [0; 6])];
    for axis in Axis::ALL {
        let xi = Generator::Coordinate(axis).slot();
        let pi = Generator::Momentum(axis).slot();
        let (a, b) = (left.0[xi], left.0[pi]);
        let (c, d) = (right.0[xi], right.0[pi]);
        let weights = reorder_weights(b, c);
        let mut next = Vec::with_capacity(partial.len() * weights.len());
        for (w0, k0, e0) in &partial {
            for (w, k) in &weights {
                let mut e = *e0;
                e[xi] = a + c - k;
                e[pi] = b + d - k;
                next.push((w0 * w, k0 + k, e));
            }
        }
        partial = next;
    }
    let mut out = OperatorPoly::zero();
    for (w, k, e) in partial {
        let coeff = minus_i_pow(k) * BigRational::from_integer(w);
        out.add_term(Monomial(e), &Scalar::from_parts(coeff, k as i32));
    }
    out
}

/// Exact normal-ordered product `A·B`.
pub fn mul(a: &OperatorPoly, b: &OperatorPoly) -> OperatorPoly {
    let mut out = OperatorPoly::zero();
    for (ma, sa) in &a.terms {
        for (mb, sb) in &b.terms {
            let s = sa * sb;
            if s.is_zero() {
                continue;
            }
            for (m, c) in mul_monomials(ma, mb).terms {
                out.add_term(m, &(&c * &s));
            }
        }
    }
    out
}

/// `[A, B] = AB − BA`.
pub fn commutator(a: &OperatorPoly, b: &OperatorPoly) -> OperatorPoly {
    &mul(a, b) - &mul(b, a)
}

/// True iff `A` has no terms.
pub fn is_zero(a: &OperatorPoly) -> bool {
    a.is_zero()
}

/// True iff `A` equals its formal adjoint.
pub fn is_hermitian(a: &OperatorPoly) -> bool {
    a.adjoint() == *a
}

impl Add for &OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: &OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: &OperatorPoly) -> OperatorPoly {
        self + &(-rhs)
    }
}

impl Neg for &OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        OperatorPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: &OperatorPoly) -> OperatorPoly {
        mul(self, rhs)
    }
}

impl Add for OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: OperatorPoly) -> OperatorPoly {
        &self + &rhs
    }
}

impl Sub for OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: OperatorPoly) -> OperatorPoly {
        &self - &rhs
    }
}

impl Mul for OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: OperatorPoly) -> OperatorPoly {
        mul(&self, &rhs)
    }
}

impl Neg for OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        -&self
    }
}

/// Prints in the operator-expression syntax, so the output re-parses to an
/// equal polynomial.
impl fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self.terms.iter().flat_map(|(m, s)| {
            let factors = m.factor_strings();
            signed_pieces(s)
                .into_iter()
                .map(move |(neg, mag, im, e)| (neg, fmt_piece(&mag, im, e, &factors)))
        });
        fmt_signed_sum(f, pieces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(gen: Generator) -> OperatorPoly {
        OperatorPoly::generator(gen)
    }

    const X: Generator = Generator::Coordinate(Axis::X);
    const Y: Generator = Generator::Coordinate(Axis::Y);
    const PX: Generator = Generator::Momentum(Axis::X);
    const PY: Generator = Generator::Momentum(Axis::Y);

    fn minus_i_hbar() -> Scalar {
        -(Scalar::i() * Scalar::hbar_pow(1))
    }

    #[test]
    fn ccr_single_swap() {
        let xp = mul(&g(X), &g(PX));
        let expected = &xp + &OperatorPoly::constant(minus_i_hbar());
        assert_eq!(mul(&g(PX), &g(X)), expected);
    }

    #[test]
    fn already_normal_ordered() {
        let xp = mul(&g(X), &g(PX));
        assert_eq!(xp.len(), 1);
        assert_eq!(xp.to_string(), "x*px");
    }

    #[test]
    fn different_axes_commute() {
        assert!(commutator(&g(PX), &g(Y)).is_zero());
        assert!(commutator(&g(PX), &g(PY)).is_zero());
    }

    #[test]
    fn linear_combine_cancels_and_scales() {
        let x = g(X);
        let one = Scalar::one();
        let minus = Scalar::integer(-1);
        assert!(linear_combine([(&one, &x), (&minus, &x)]).is_zero());
        let two = Scalar::integer(2);
        let px = g(PX);
        assert_eq!(linear_combine([(&two, &px)]).to_string(), "2*px");
    }

    #[test]
    fn adjoint_of_i_x_is_minus_i_x() {
        let ix = g(X).scale(&Scalar::i());
        assert_eq!(ix.adjoint(), -&ix);
        assert!(!is_hermitian(&ix));
    }

    #[test]
    fn symmetrized_product_is_hermitian() {
        let sym = &mul(&g(X), &g(PX)) + &mul(&g(PX), &g(X));
        assert!(is_hermitian(&sym));
        assert!(!is_hermitian(&mul(&g(X), &g(PX))));
    }

    #[test]
    fn reorder_weights_small_cases() {
        // p^2 x^2 = x^2 p^2 - 4iħ x p - 2ħ^2
        let w: Vec<_> = reorder_weights(2, 2).into_iter().map(|(w, k)| (w.to_string(), k)).collect();
        assert_eq!(w, vec![("1".into(), 0), ("4".into(), 1), ("2".into(), 2)]);
    }

    #[test]
    fn display_of_mixed_terms() {
        let p = mul(&mul(&g(PX), &g(PX)), &mul(&g(X), &g(X)));
        assert_eq!(p.to_string(), "-2*hbar^2 - 4*i*hbar*x*px + x^2*px^2");
        assert_eq!(OperatorPoly::zero().to_string(), "0");
    }
}

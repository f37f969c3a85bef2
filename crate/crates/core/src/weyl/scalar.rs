use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact complex rational `a + b·i`.
pub type GaussianRational = Complex<BigRational>;

/// Exact coefficient: a Laurent polynomial in ℏ with Gaussian-rational
/// coefficients.
///
/// The map is keyed by the ℏ exponent. No stored coefficient is zero, so the
/// empty map is the unique zero and structural equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    terms: BTreeMap<i32, GaussianRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_parts(GaussianRational::one(), 0)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_parts(GaussianRational::i(), 0)
    }

    /// `ℏ^exponent`.
    pub fn hbar_pow(exponent: i32) -> Self {
        Self::from_parts(GaussianRational::one(), exponent)
    }

    /// Exact rational `numer / denom`.
    ///
    /// Panics if `denom` is zero.
    pub fn rational(numer: i64, denom: i64) -> Self {
        let q = BigRational::new(BigInt::from(numer), BigInt::from(denom));
        Self::from_parts(Complex::new(q, BigRational::zero()), 0)
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(n, 1)
    }

    /// `coefficient · ℏ^exponent`.
    pub fn from_parts(coefficient: GaussianRational, exponent: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterates `(ℏ exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussianRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Returns `(coefficient, exponent)` when the scalar is a single nonzero
    /// `c·ℏ^e`, i.e. when it is invertible in this ring.
    pub fn as_monomial(&self) -> Option<(&GaussianRational, i32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// Multiplicative inverse of a single-term scalar.
    pub fn inverse(&self) -> Option<Scalar> {
        let (c, e) = self.as_monomial()?;
        Some(Self::from_parts(c.inv(), -e))
    }

    /// Complex conjugate (ℏ is real).
    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    /// Numerical value with ℏ set to 1.
    pub fn eval_unit_hbar(&self) -> Complex<f64> {
        use num_traits::ToPrimitive;
        self.terms.values().fold(Complex::new(0.0, 0.0), |acc, c| {
            acc + Complex::new(
                c.re.to_f64().unwrap_or(f64::NAN),
                c.im.to_f64().unwrap_or(f64::NAN),
            )
        })
    }

    pub(crate) fn add_term(&mut self, exponent: i32, coefficient: GaussianRational) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(GaussianRational::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub(crate) fn add_assign_ref(&mut self, other: &Scalar) {
        for (e, c) in &other.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::integer(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Formats `|q|` as `n` or `n/d`.
pub(crate) fn fmt_magnitude(q: &BigRational) -> String {
    let q = q.abs();
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Splits a scalar into signed real/imaginary pieces, one per ℏ power:
/// `(negative, magnitude, imaginary, hbar_exponent)`.
pub(crate) fn signed_pieces(s: &Scalar) -> Vec<(bool, BigRational, bool, i32)> {
    let mut out = Vec::new();
    for (e, c) in s.terms() {
        if !c.re.is_zero() {
            out.push((c.re.is_negative(), c.re.abs(), false, e));
        }
        if !c.im.is_zero() {
            out.push((c.im.is_negative(), c.im.abs(), true, e));
        }
    }
    out
}

/// Renders `factors` (already-formatted generator powers) behind a scalar
/// piece, e.g. `3/2*i*hbar*x*px` or `x/hbar^2`.
pub(crate) fn fmt_piece(magnitude: &BigRational, imaginary: bool, hbar: i32, factors: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !magnitude.is_one() {
        parts.push(fmt_magnitude(magnitude));
    }
    if imaginary {
        parts.push("i".to_string());
    }
    match hbar {
        1 => parts.push("hbar".to_string()),
        e if e > 1 => parts.push(format!("hbar^{e}")),
        _ => {}
    }
    parts.extend(factors.iter().cloned());
    let mut text = if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    };
    match hbar {
        -1 => text.push_str("/hbar"),
        e if e < -1 => text.push_str(&format!("/hbar^{}", -e)),
        _ => {}
    }
    text
}

pub(crate) fn fmt_signed_sum<I>(f: &mut fmt::Formatter<'_>, pieces: I) -> fmt::Result
where
    I: IntoIterator<Item = (bool, String)>,
{
    let mut first = true;
    for (negative, text) in pieces {
        match (first, negative) {
            (true, true) => write!(f, "-{text}")?,
            (true, false) => write!(f, "{text}")?,
            (false, true) => write!(f, " - {text}")?,
            (false, false) => write!(f, " + {text}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = signed_pieces(self)
            .into_iter()
            .map(|(neg, mag, im, e)| (neg, fmt_piece(&mag, im, e, &[])));
        fmt_signed_sum(f, pieces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_empty_and_cancellation_removes_terms() {
        let a = Scalar::hbar_pow(2);
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_eq!(diff, Scalar::zero());
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::integer(-1));
    }

    #[test]
    fn laurent_exponents_combine() {
        let s = Scalar::hbar_pow(-1) * Scalar::hbar_pow(3);
        assert_eq!(s, Scalar::hbar_pow(2));
        assert_eq!(Scalar::hbar_pow(-2).inverse(), Some(Scalar::hbar_pow(2)));
    }

    #[test]
    fn display() {
        let s = &(Scalar::rational(-3, 2) * Scalar::i()) * &Scalar::hbar_pow(-1);
        assert_eq!(s.to_string(), "-3/2*i/hbar");
        assert_eq!((Scalar::one() + Scalar::hbar_pow(2)).to_string(), "1 + hbar^2");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn multi_term_scalar_has_no_inverse() {
        assert!((Scalar::one() + Scalar::i()).inverse().is_some());
        assert!((Scalar::one() + Scalar::hbar_pow(1)).inverse().is_none());
    }
}

use super::poly::{linear_combine, mul, Axis, Generator, OperatorPoly};
use super::scalar::Scalar;

/// Names of every polynomial built-in, canonical spelling.
pub const BUILTIN_NAMES: [&str; 10] = ["x", "y", "z", "p_x", "p_y", "p_z", "l_x", "l_y", "l_z", "L2"];

/// Name that is not a polynomial built-in.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown operator `{0}`")]
pub struct UnknownOperator(pub String);

/// A polynomial observable available without configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Coordinate(Axis),
    Momentum(Axis),
    Angular(Axis),
    AngularSquared,
}

impl Builtin {
    pub const ALL: [Builtin; 10] = [
        Builtin::Coordinate(Axis::X),
        Builtin::Coordinate(Axis::Y),
        Builtin::Coordinate(Axis::Z),
        Builtin::Momentum(Axis::X),
        Builtin::Momentum(Axis::Y),
        Builtin::Momentum(Axis::Z),
        Builtin::Angular(Axis::X),
        Builtin::Angular(Axis::Y),
        Builtin::Angular(Axis::Z),
        Builtin::AngularSquared,
    ];

    /// Accepts the canonical names (`p_x`, `l_z`, `L2`) and the compact
    /// expression spellings (`px`, `lz`).
    pub fn from_name(name: &str) -> Option<Builtin> {
        let b = match name {
            "x" => Builtin::Coordinate(Axis::X),
            "y" => Builtin::Coordinate(Axis::Y),
            "z" => Builtin::Coordinate(Axis::Z),
            "p_x" | "px" => Builtin::Momentum(Axis::X),
            "p_y" | "py" => Builtin::Momentum(Axis::Y),
            "p_z" | "pz" => Builtin::Momentum(Axis::Z),
            "l_x" | "lx" => Builtin::Angular(Axis::X),
            "l_y" | "ly" => Builtin::Angular(Axis::Y),
            "l_z" | "lz" => Builtin::Angular(Axis::Z),
            "L2" => Builtin::AngularSquared,
            _ => return None,
        };
        Some(b)
    }

    pub fn name(self) -> &'static str {
        let i = Builtin::ALL.iter().position(|b| *b == self).unwrap();
        BUILTIN_NAMES[i]
    }

    pub fn poly(self) -> OperatorPoly {
        match self {
            Builtin::Coordinate(a) => OperatorPoly::generator(Generator::Coordinate(a)),
            Builtin::Momentum(a) => OperatorPoly::generator(Generator::Momentum(a)),
            Builtin::Angular(a) => angular(a),
            Builtin::AngularSquared => Axis::ALL.iter().fold(OperatorPoly::zero(), |acc, a| {
                let l = angular(*a);
                &acc + &mul(&l, &l)
            }),
        }
    }
}

/// `l_i = (x_j p_k − x_k p_j)/ℏ` for cyclic `(i, j, k)`.
fn angular(axis: Axis) -> OperatorPoly {
    let (j, k) = match axis {
        Axis::X => (Axis::Y, Axis::Z),
        Axis::Y => (Axis::Z, Axis::X),
        Axis::Z => (Axis::X, Axis::Y),
    };
    let q = |a| OperatorPoly::generator(Generator::Coordinate(a));
    let p = |a| OperatorPoly::generator(Generator::Momentum(a));
    let inv_hbar = Scalar::hbar_pow(-1);
    let neg_inv_hbar = -&inv_hbar;
    linear_combine([
        (&inv_hbar, &mul(&q(j), &p(k))),
        (&neg_inv_hbar, &mul(&q(k), &p(j))),
    ])
}

/// Polynomial for a built-in observable name.
pub fn builtin(name: &str) -> Result<OperatorPoly, UnknownOperator> {
    Builtin::from_name(name)
        .map(Builtin::poly)
        .ok_or_else(|| UnknownOperator(name.to_string()))
}

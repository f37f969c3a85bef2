//! Exact arithmetic in the three-dimensional Weyl algebra.
//!
//! Elements are polynomials in `x, y, z, px, py, pz` kept in normal order
//! (coordinates left of momenta) with coefficients that are Laurent
//! polynomials in ℏ over the Gaussian rationals. The only rewrite rule is the
//! canonical commutation relation `p_i x_i = x_i p_i − iℏ`; everything else,
//! including the angular-momentum algebra, follows from it.
//!
//! ```
//! use qramsey::weyl::{builtin, commutator, Scalar, OperatorPoly};
//!
//! let lx = builtin("l_x").unwrap();
//! let ly = builtin("l_y").unwrap();
//! let lz = builtin("l_z").unwrap();
//! assert_eq!(commutator(&lx, &ly), lz.scale(&Scalar::i()));
//! ```

mod builtin;
mod poly;
mod scalar;

pub use builtin::{builtin, Builtin, UnknownOperator, BUILTIN_NAMES};
pub use poly::{commutator, is_hermitian, is_zero, linear_combine, mul, Axis, Generator, Monomial, OperatorPoly};
pub use scalar::{GaussianRational, Scalar};

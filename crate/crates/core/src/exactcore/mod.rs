//! Exact arithmetic foundation.

mod binpoly;
mod gf2;
mod gf2poly;
mod linsolve;
mod zpoly;

pub use binpoly::BinPoly;
pub use gf2::{gf2_kernel, BitMatrix, BitVector};
pub use gf2poly::{monomials_up_to, GF2Poly, Monomial};
pub use linsolve::solve_linear_exact;
pub use zpoly::IntPoly;

pub use num_bigint::BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;

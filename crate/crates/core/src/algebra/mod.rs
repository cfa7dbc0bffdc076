//! Exact arithmetic kernels.

mod intpoly;
mod laurent;
mod matrix;
mod sturm;
mod symmetric;

pub use intpoly::IntPoly;
pub use laurent::LaurentPoly;
pub use matrix::{det_poly_matrix, Matrix};
pub use sturm::{roots_with_multiplicity, squarefree_mults, sturm_count};
pub use symmetric::{signature_hermitian_realified, Inertia, SymRatMatrix};

/// Arbitrary-precision rational; always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

#[cfg(test)]
pub(crate) fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

//! Exact arithmetic: rationals, sparse polynomials in `x_1..x_r, h`, affine
//! root forms, root fractions and torus-mixed coefficients.

mod form;
mod fraction;
mod poly;
mod torus;

pub use form::AffineForm;
pub use fraction::{is_polynomial, reduce, RootFraction};
pub use poly::{substitute_linear, LinearSubstitution, Monomial, SparsePoly};
pub use torus::{torus_mul, TorusMixed};

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

//! Exact symbolic kernel for degenerate nil-Hecke algebras.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`rootdata`]: finite crystallographic root data (types A–G) in
//!   fundamental-weight coordinates;
//! * [`weyl`]: finite and extended affine Weyl groups, lengths and reduced
//!   words;
//! * [`exactalg`]: sparse polynomials over `Q` in `x_1..x_r, h`, affine root
//!   forms, fractions with root-form denominators and torus-mixed
//!   coefficients;
//! * [`skew`]: the skew group algebra `W~ ⋉ Q(t*_aff)` with Demazure elements;
//! * [`nilhecke`]: the theta-basis normal form, membership decision and the
//!   structural identities of the nil-Hecke algebra and the nil-DAHA.
//!
//! Coordinates: a point `x` of `t*` is written through `x_i = <x, α̌_i>`, so
//! weights are integer vectors and every group action is an integer-linear
//! substitution. The extra coordinate `h` is the minimal imaginary coroot.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod exactalg;
pub mod linalg;
pub mod nilhecke;
pub mod rootdata;
pub mod skew;
pub mod weyl;

pub use error::{Error, Result};
pub use exactalg::{AffineForm, Monomial, Rational, RootFraction, SparsePoly, TorusMixed};
pub use nilhecke::{NilHecke, NilHeckeElement};
pub use rootdata::{CartanType, Coroot, Root, RootDatum, Weight};
pub use skew::SkewElement;
pub use weyl::{AffineSimpleIndex, ExtAffineElement, FiniteWeylElement};

//! The nil-Hecke algebra inside the skew group algebra.
//!
//! An element is stored in the theta basis, `Σ f_w θ_w` with polynomial
//! coefficients on the left, where `θ_w = [ω] θ_{i_1} ⋯ θ_{i_k}` for the
//! canonical factorization returned by [`reduced_word`]. A skew element
//! belongs to the algebra exactly when this expansion exists, which
//! [`NilHecke::membership`] decides by peeling off maximal-length terms.

// A rejection carries its witness by value; it is the rare path.
#![allow(clippy::result_large_err)]

mod element;
pub mod module;
pub mod morita;
pub mod phi;
pub mod straighten;
pub mod verify;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{ratio, Rational, RootFraction, SparsePoly};
use crate::rootdata::RootDatum;
use crate::skew::{theta_simple, SkewElement};
use crate::weyl::{finite_group, is_reduced, reduced_word, word_product, AffineSimpleIndex, ExtAffineElement};

pub use element::NilHeckeElement;
pub use module::{module_extension_check, DegreeReport, GradedModuleSlice, ModuleReport};
pub use morita::{morita_unit, MoritaUnit};
pub use phi::{phi_image, reduce_at_hbar_zero, verify_phi2, TorusSkew};
pub use verify::{verify_th0, Th0Check};

/// First coefficient that is not a polynomial while peeling.
#[derive(Clone, PartialEq, Eq)]
pub struct Rejection {
    pub index: ExtAffineElement,
    pub coeff: RootFraction,
}

impl fmt::Debug for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a member: coefficient {} at {:?}", self.coeff, self.index)
    }
}

/// Which specialization of `h` the skew algebra lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hbar {
    Generic,
    Zero,
}

/// A root datum together with a cache of expanded theta-basis elements.
///
/// The cache uses interior mutability, so a context is not `Sync`; parallel
/// callers build one context per worker.
pub struct NilHecke {
    datum: RootDatum,
    thetas: RefCell<BTreeMap<ExtAffineElement, SkewElement>>,
    thetas_zero: RefCell<BTreeMap<ExtAffineElement, SkewElement>>,
}

impl fmt::Debug for NilHecke {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NilHecke")
            .field("type", &self.datum.label())
            .field("cached", &self.thetas.borrow().len())
            .finish()
    }
}

impl NilHecke {
    pub fn new(datum: RootDatum) -> Self {
        NilHecke { datum, thetas: RefCell::new(BTreeMap::new()), thetas_zero: RefCell::new(BTreeMap::new()) }
    }

    pub fn build(label: &str) -> Result<Self> {
        Ok(Self::new(RootDatum::build(label)?))
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    /// Number of polynomial variables: `x_1..x_r` and `h`.
    pub fn nvars(&self) -> usize {
        self.datum.rank + 1
    }

    pub fn length(&self, w: &ExtAffineElement) -> usize {
        w.length(&self.datum)
    }

    /// `θ_w` expanded in the skew algebra.
    pub fn theta(&self, w: &ExtAffineElement) -> SkewElement {
        if let Some(t) = self.thetas.borrow().get(w) {
            return t.clone();
        }
        let (omega, word) = reduced_word(&self.datum, w);
        let value = match word.last() {
            None => SkewElement::group(omega),
            Some(&last) => {
                let prefix = w.mul(&crate::weyl::simple_reflection(&self.datum, last));
                let head = self.theta(&prefix);
                &head * &theta_simple(&self.datum, last).expect("index from reduced word")
            }
        };
        self.thetas.borrow_mut().insert(w.clone(), value.clone());
        value
    }

    /// `θ_w` in the `h = 0` algebra.
    pub fn theta_at_zero(&self, w: &ExtAffineElement) -> SkewElement {
        if let Some(t) = self.thetas_zero.borrow().get(w) {
            return t.clone();
        }
        let value = self.theta(w).specialize_hbar_zero().expect("real affine forms stay nonzero at h = 0");
        self.thetas_zero.borrow_mut().insert(w.clone(), value.clone());
        value
    }

    fn theta_in(&self, w: &ExtAffineElement, mode: Hbar) -> SkewElement {
        match mode {
            Hbar::Generic => self.theta(w),
            Hbar::Zero => self.theta_at_zero(w),
        }
    }

    /// Product of `θ_i` along a word, which must be reduced.
    pub fn theta_word(&self, word: &[AffineSimpleIndex]) -> Result<SkewElement> {
        for &i in word {
            crate::weyl::check_index(&self.datum, i)?;
        }
        if !is_reduced(&self.datum, word) {
            return Err(Error::NotReduced);
        }
        let mut out = SkewElement::one(self.nvars());
        for &i in word {
            out = &out * &theta_simple(&self.datum, i)?;
        }
        Ok(out)
    }

    /// Checks that two reduced words for `w` give the same product of
    /// thetas. Both words must be reduced expressions of `w` up to the
    /// length-zero factor, which is prepended.
    pub fn theta_word_invariance(
        &self,
        w: &ExtAffineElement,
        first: &[AffineSimpleIndex],
        second: &[AffineSimpleIndex],
    ) -> Result<bool> {
        let (omega, _) = reduced_word(&self.datum, w);
        for word in [first, second] {
            if omega.mul(&word_product(&self.datum, word)) != *w {
                return Err(Error::NotReduced);
            }
        }
        let omega = SkewElement::group(omega);
        let a = &omega * &self.theta_word(first)?;
        let b = &omega * &self.theta_word(second)?;
        Ok(a == b)
    }

    pub fn expand(&self, u: &NilHeckeElement) -> SkewElement {
        self.expand_in(u, Hbar::Generic)
    }

    /// Expansion in the `h = 0` algebra. Coefficients are specialized first.
    pub fn expand_at_zero(&self, u: &NilHeckeElement) -> SkewElement {
        self.expand_in(&u.specialize(&Rational::from_integer(0.into())), Hbar::Zero)
    }

    fn expand_in(&self, u: &NilHeckeElement, mode: Hbar) -> SkewElement {
        let mut out = SkewElement::zero(self.nvars());
        for (w, f) in u.terms() {
            let t = self.theta_in(w, mode);
            let part = t.left_scale(&RootFraction::from_poly(f.clone()));
            out = &out + &part;
        }
        out
    }

    /// Theta-basis expansion of a skew element, or the first witness that
    /// it is not in the algebra.
    pub fn membership(&self, u: &SkewElement) -> core::result::Result<NilHeckeElement, Rejection> {
        self.membership_in(u, Hbar::Generic)
    }

    /// Same as [`membership`](Self::membership) for an element of the `h = 0`
    /// skew algebra.
    pub fn membership_at_zero(&self, u: &SkewElement) -> core::result::Result<NilHeckeElement, Rejection> {
        self.membership_in(u, Hbar::Zero)
    }

    fn membership_in(&self, u: &SkewElement, mode: Hbar) -> core::result::Result<NilHeckeElement, Rejection> {
        let mut rest = u.clone();
        let mut out = NilHeckeElement::zero(self.nvars());
        while let Some((_, top)) = rest.max_length_support(&self.datum) {
            for w in top {
                let theta = self.theta_in(&w, mode);
                let lead = theta.coeff(&w).inverse_monomial().expect("leading coefficient is a product of forms");
                let f = &rest.coeff(&w) * &lead;
                let Some(p) = f.is_polynomial().cloned() else {
                    return Err(Rejection { index: w, coeff: f });
                };
                rest = &rest - &theta.left_scale(&f);
                out.add_term(w, p);
            }
        }
        Ok(out)
    }

    /// Product in the algebra, computed in the skew algebra and converted
    /// back by peeling.
    pub fn mul(&self, a: &NilHeckeElement, b: &NilHeckeElement) -> Result<NilHeckeElement> {
        let prod = &self.expand(a) * &self.expand(b);
        self.membership(&prod)
            .map_err(|r| Error::NotAMember(format!("{:?}", r.index)))
    }

    /// `e^μ` as a theta-basis element (a length-zero times reduced word).
    pub fn group_element(&self, w: &ExtAffineElement) -> NilHeckeElement {
        self.membership(&SkewElement::group(w.clone())).expect("group elements are members")
    }

    /// Homogeneous components, keyed by degree `deg f - ℓ(w)`.
    pub fn grade(&self, u: &NilHeckeElement) -> BTreeMap<i64, NilHeckeElement> {
        let mut out: BTreeMap<i64, NilHeckeElement> = BTreeMap::new();
        for (w, f) in u.terms() {
            let l = self.length(w) as i64;
            for (d, part) in f.homogeneous_parts() {
                out.entry(d as i64 - l)
                    .or_insert_with(|| NilHeckeElement::zero(self.nvars()))
                    .add_term(w.clone(), part);
            }
        }
        out
    }

    /// Degree of a homogeneous element, `None` for zero or mixed elements.
    pub fn degree(&self, u: &NilHeckeElement) -> Option<i64> {
        let parts = self.grade(u);
        if parts.len() == 1 {
            parts.keys().next().copied()
        } else {
            None
        }
    }

    /// `(1/|W|) Σ_{w ∈ W} [w]` for the finite Weyl group.
    pub fn symmetrizer(&self) -> NilHeckeElement {
        let group = finite_group(&self.datum);
        let c = ratio(1, group.len() as i64);
        let mut u = SkewElement::zero(self.nvars());
        for w in group {
            u.add_term(ExtAffineElement::from_finite(w), RootFraction::constant(self.nvars(), c.clone()));
        }
        self.membership(&u).expect("symmetrizer is a member")
    }

    /// `e · u · e`.
    pub fn spherical_project(&self, u: &NilHeckeElement) -> Result<NilHeckeElement> {
        let e = self.symmetrizer();
        let left = self.mul(&e, u)?;
        self.mul(&left, &e)
    }

    pub fn poly(&self, f: SparsePoly) -> NilHeckeElement {
        NilHeckeElement::poly(f)
    }

    pub fn theta_basis(&self, w: ExtAffineElement) -> NilHeckeElement {
        NilHeckeElement::basis(self.nvars(), w)
    }

    /// Basis elements `θ_w` of the finite Weyl group.
    pub fn finite_basis(&self) -> Vec<ExtAffineElement> {
        finite_group(&self.datum).into_iter().map(ExtAffineElement::from_finite).collect()
    }
}

/// Free function forms.
pub fn membership(nh: &NilHecke, u: &SkewElement) -> core::result::Result<NilHeckeElement, Rejection> {
    nh.membership(u)
}

pub fn nh_mul(nh: &NilHecke, a: &NilHeckeElement, b: &NilHeckeElement) -> Result<NilHeckeElement> {
    nh.mul(a, b)
}

pub fn specialize(u: &NilHeckeElement, c: &Rational) -> NilHeckeElement {
    u.specialize(c)
}

#[cfg(test)]
mod tests;

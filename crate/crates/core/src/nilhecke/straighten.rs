//! Multiplication by straightening theta words, without passing through
//! the skew algebra. Uses only
//!
//! * `θ_i f = (s_i f) θ_i + ∂_i(f)`,
//! * `θ_i θ_v = θ_{s_i v}` if `ℓ(s_i v) > ℓ(v)` and `0` otherwise,
//! * `[ω] f θ_v = (ω f) θ_{ωv}` for `ℓ(ω) = 0`.

use crate::error::{Error, Result};
use crate::exactalg::SparsePoly;
use crate::rootdata::RootDatum;
use crate::skew::simple_form;
use crate::weyl::{reduced_word, simple_reflection, AffineSimpleIndex, ExtAffineElement};

use super::NilHeckeElement;

/// Divided difference `(s_i f - f) / form_i`, always a polynomial.
pub fn divided_difference(datum: &RootDatum, i: AffineSimpleIndex, f: &SparsePoly) -> Result<SparsePoly> {
    let s = simple_reflection(datum, i);
    let moved = f.substitute(&s.substitution())?;
    let diff = &moved - f;
    diff.exact_divide(&simple_form(datum, i))
        .ok_or_else(|| Error::NotAMember(alloc::format!("divided difference at node {i}")))
}

fn left_mul_theta(datum: &RootDatum, i: AffineSimpleIndex, u: &NilHeckeElement) -> Result<NilHeckeElement> {
    let s = simple_reflection(datum, i);
    let sub = s.substitution();
    let mut out = NilHeckeElement::zero(u.nvars());
    for (v, f) in u.terms() {
        let sv = s.mul(v);
        if sv.length(datum) > v.length(datum) {
            out.add_term(sv, f.substitute(&sub)?);
        }
        out.add_term(v.clone(), divided_difference(datum, i, f)?);
    }
    Ok(out)
}

fn left_mul_omega(omega: &ExtAffineElement, u: &NilHeckeElement) -> Result<NilHeckeElement> {
    let sub = omega.substitution();
    let mut out = NilHeckeElement::zero(u.nvars());
    for (v, f) in u.terms() {
        out.add_term(omega.mul(v), f.substitute(&sub)?);
    }
    Ok(out)
}

/// `θ_w · u`.
pub fn left_mul_basis(datum: &RootDatum, w: &ExtAffineElement, u: &NilHeckeElement) -> Result<NilHeckeElement> {
    let (omega, word) = reduced_word(datum, w);
    let mut acc = u.clone();
    for &i in word.iter().rev() {
        acc = left_mul_theta(datum, i, &acc)?;
    }
    if omega.is_identity() {
        Ok(acc)
    } else {
        left_mul_omega(&omega, &acc)
    }
}

/// `a · b` by straightening.
pub fn straighten_mul(datum: &RootDatum, a: &NilHeckeElement, b: &NilHeckeElement) -> Result<NilHeckeElement> {
    let mut out = NilHeckeElement::zero(a.nvars());
    for (w, f) in a.terms() {
        let part = left_mul_basis(datum, w, b)?.left_mul_poly(f);
        out = &out + &part;
    }
    Ok(out)
}

/// Action of a theta-basis element on a polynomial.
pub fn act_on_poly(datum: &RootDatum, u: &NilHeckeElement, g: &SparsePoly) -> Result<SparsePoly> {
    let mut out = SparsePoly::zero(u.nvars());
    for (w, f) in u.terms() {
        let (omega, word) = reduced_word(datum, w);
        let mut acc = g.clone();
        for &i in word.iter().rev() {
            acc = divided_difference(datum, i, &acc)?;
        }
        let moved = acc.substitute(&omega.substitution())?;
        out = &out + &(f * &moved);
    }
    Ok(out)
}

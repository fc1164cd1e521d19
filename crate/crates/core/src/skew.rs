//! The skew group algebra `W~ ⋉ Q(t*_aff)`.
//!
//! Elements are finite sums `Σ c_w · [w]` with the coefficient on the left.
//! A group element acts on functions by `(w ▷ f)(p) = f(w⁻¹ p)`, so
//! `[u] · d = (u ▷ d) · [u]` and
//! `(c [u]) (d [v]) = (c · (u ▷ d)) [uv]`.
//! With this convention `e^μ ▷ f = f(x - h μ, h)` and
//! `ξ · e^μ = e^μ · (ξ + <μ, ξ> h)` hold literally.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactalg::{rat, AffineForm, Rational, RootFraction, SparsePoly};
use crate::rootdata::{Coroot, RootDatum, Weight};
use crate::weyl::{check_index, simple_reflection, AffineSimpleIndex, ExtAffineElement, FiniteWeylElement};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewElement {
    nvars: usize,
    terms: BTreeMap<ExtAffineElement, RootFraction>,
}

impl fmt::Debug for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]·{w:?}")?;
        }
        Ok(())
    }
}

impl SkewElement {
    pub fn zero(nvars: usize) -> Self {
        SkewElement { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::group(ExtAffineElement::identity(nvars - 1))
    }

    /// `[w]`.
    pub fn group(w: ExtAffineElement) -> Self {
        let nvars = w.rank() + 1;
        Self::term(RootFraction::one(nvars), w)
    }

    /// `c · [w]`.
    pub fn term(c: RootFraction, w: ExtAffineElement) -> Self {
        let mut terms = BTreeMap::new();
        let nvars = c.nvars();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        SkewElement { nvars, terms }
    }

    /// `c · [id]`.
    pub fn scalar(c: RootFraction) -> Self {
        let r = c.nvars() - 1;
        Self::term(c, ExtAffineElement::identity(r))
    }

    pub fn poly(p: SparsePoly) -> Self {
        Self::scalar(RootFraction::from_poly(p))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExtAffineElement, RootFraction)>) -> Self {
        let mut out = SkewElement::zero(nvars);
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.nvars - 1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtAffineElement, &RootFraction)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &ExtAffineElement) -> RootFraction {
        self.terms.get(w).cloned().unwrap_or_else(|| RootFraction::zero(self.nvars))
    }

    pub fn support(&self) -> impl Iterator<Item = &ExtAffineElement> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, w: ExtAffineElement, c: RootFraction) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            None => {
                self.terms.insert(w, c);
            }
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert(w, sum);
                }
            }
        }
    }

    /// Left multiplication by a coefficient: `c · Σ d_w [w]`.
    pub fn left_scale(&self, c: &RootFraction) -> SkewElement {
        if c.is_zero() {
            return SkewElement::zero(self.nvars);
        }
        SkewElement {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(w, d)| (w.clone(), c * d))
                .filter(|(_, d)| !d.is_zero())
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SkewElement {
        self.left_scale(&RootFraction::constant(self.nvars, c.clone()))
    }

    /// `u ▷ (self)` applied to a function: `Σ c_w (w ▷ f)`.
    pub fn act_fraction(&self, f: &RootFraction) -> Result<RootFraction> {
        let mut out = RootFraction::zero(self.nvars);
        for (w, c) in &self.terms {
            let moved = f.substitute(&w.substitution())?;
            out = &out + &(c * &moved);
        }
        Ok(out)
    }

    pub fn act(&self, f: &SparsePoly) -> Result<RootFraction> {
        self.act_fraction(&RootFraction::from_poly(f.clone()))
    }

    /// Multiplies and returns an error on ring mismatch instead of panicking.
    pub fn try_mul(&self, rhs: &SkewElement) -> Result<SkewElement> {
        if self.nvars != rhs.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: rhs.nvars });
        }
        let mut out = SkewElement::zero(self.nvars);
        for (u, c) in &self.terms {
            let sub = u.substitution();
            for (v, d) in &rhs.terms {
                let moved = d.substitute(&sub)?;
                out.add_term(u.mul(v), c * &moved);
            }
        }
        Ok(out)
    }

    /// Coefficients evaluated at `h = 0`, group part unchanged.
    pub fn specialize_hbar_zero(&self) -> Result<SkewElement> {
        let mut out = SkewElement::zero(self.nvars);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.at_hbar_zero()?);
        }
        Ok(out)
    }

    /// Product in the `h = 0` algebra, where translations act trivially on
    /// coefficients. Both operands should be `h`-free.
    pub fn mul_hbar_zero(&self, rhs: &SkewElement) -> Result<SkewElement> {
        if self.nvars != rhs.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: rhs.nvars });
        }
        let mut out = SkewElement::zero(self.nvars);
        for (u, c) in &self.terms {
            let sub = ExtAffineElement::from_finite(u.finite.clone()).substitution();
            for (v, d) in &rhs.terms {
                let moved = d.substitute(&sub)?;
                out.add_term(u.mul(v), c * &moved);
            }
        }
        Ok(out)
    }

    /// The part of the element supported on `W~` elements of maximal length.
    pub fn max_length_support(&self, datum: &RootDatum) -> Option<(usize, Vec<ExtAffineElement>)> {
        let mut best: Option<(usize, Vec<ExtAffineElement>)> = None;
        for w in self.terms.keys() {
            let l = w.length(datum);
            match &mut best {
                Some((bl, v)) if *bl == l => v.push(w.clone()),
                Some((bl, _)) if *bl > l => {}
                _ => best = Some((l, alloc::vec![w.clone()])),
            }
        }
        best
    }
}

impl Add for &SkewElement {
    type Output = SkewElement;
    fn add(self, rhs: &SkewElement) -> SkewElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SkewElement {
    type Output = SkewElement;
    fn neg(self) -> SkewElement {
        SkewElement {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Sub for &SkewElement {
    type Output = SkewElement;
    fn sub(self, rhs: &SkewElement) -> SkewElement {
        self + &(-rhs)
    }
}

impl Mul for &SkewElement {
    type Output = SkewElement;
    fn mul(self, rhs: &SkewElement) -> SkewElement {
        self.try_mul(rhs).expect("operands live in the same ring")
    }
}

/// Free function form of the product.
pub fn skew_mul(a: &SkewElement, b: &SkewElement) -> SkewElement {
    a * b
}

/// Free function form of the action on polynomials.
pub fn act(a: &SkewElement, f: &SparsePoly) -> Result<RootFraction> {
    a.act(f)
}

/// The linear form whose zero set is the wall of `s_i`: `α̌_i` for finite
/// nodes and `h - <x, θ̌>` for the affine node. Every form is positive on
/// the fundamental alcove.
pub fn simple_form(datum: &RootDatum, i: AffineSimpleIndex) -> AffineForm {
    let nvars = datum.rank + 1;
    match i.finite() {
        Some(k) => {
            let mut c = alloc::vec![0; nvars];
            c[k] = 1;
            AffineForm::new(c).expect("nonzero")
        }
        None => {
            let theta = &datum.affine_root.coroot;
            let mut c: Vec<i64> = theta.0.iter().map(|v| -v).collect();
            c.push(1);
            AffineForm::new(c).expect("nonzero")
        }
    }
}

/// `θ_i = (1 / form_i) ([s_i] - [id])`.
pub fn theta_simple(datum: &RootDatum, i: AffineSimpleIndex) -> Result<SkewElement> {
    check_index(datum, i)?;
    let form = simple_form(datum, i);
    let nvars = datum.rank + 1;
    let inv = RootFraction::inverse_form(&form);
    let s = simple_reflection(datum, i);
    Ok(SkewElement::from_terms(
        nvars,
        [(s, inv.clone()), (ExtAffineElement::identity(datum.rank), -&inv)],
    ))
}

/// Demazure element of an arbitrary reflection `s` with wall `form = 0`:
/// `(1/form)([s] - [id])`.
pub fn demazure_element(form: &AffineForm, reflection: ExtAffineElement) -> SkewElement {
    let inv = RootFraction::inverse_form(form);
    let r = reflection.rank();
    SkewElement::from_terms(form.nvars(), [(reflection, inv.clone()), (ExtAffineElement::identity(r), -&inv)])
}

/// `[w] · a · [w⁻¹]`.
pub fn conjugate(w: &ExtAffineElement, a: &SkewElement) -> SkewElement {
    let left = SkewElement::group(w.clone());
    let right = SkewElement::group(w.inverse());
    &(&left * a) * &right
}

/// `θ_β` for a finite root `β` (given by its weight coordinates), computed
/// as `w θ_{α_i} w⁻¹` for a conjugator `β = w(α_i)`.
pub fn theta_root(datum: &RootDatum, beta: &Weight) -> Result<SkewElement> {
    let conj = datum.conjugator(beta)?;
    let w = conj.word.iter().fold(FiniteWeylElement::identity(datum.rank), |acc, &j| {
        acc.mul(&FiniteWeylElement::simple_reflection(datum, j))
    });
    let theta = theta_simple(datum, AffineSimpleIndex(conj.simple + 1))?;
    Ok(conjugate(&ExtAffineElement::from_finite(w), &theta))
}

/// `[w]` as an element of the skew algebra.
pub fn group_embed(w: &ExtAffineElement) -> SkewElement {
    SkewElement::group(w.clone())
}

/// `e^μ`.
pub fn e_mu(mu: &Weight) -> SkewElement {
    SkewElement::group(ExtAffineElement::translation(mu.clone()))
}

/// The element `ξ ∈ t` as a linear polynomial `Σ ξ_i x_i`.
pub fn coroot_poly(xi: &Coroot) -> SparsePoly {
    let mut c = xi.0.clone();
    c.push(0);
    SparsePoly::linear(&c)
}

/// Checks `ξ · e^μ = e^μ · (ξ + <μ, ξ> h)`.
pub fn check_ddh(datum: &RootDatum, mu: &Weight, xi: &Coroot) -> Result<bool> {
    let pairing = datum.pairing(mu, xi)?;
    let nvars = datum.rank + 1;
    let xi_p = coroot_poly(xi);
    let lhs = &SkewElement::poly(xi_p.clone()) * &e_mu(mu);
    let shifted = &xi_p + &SparsePoly::hbar(nvars).scale(&rat(pairing));
    let rhs = &e_mu(mu) * &SkewElement::poly(shifted);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{finite_group, word_product};

    fn d(label: &str) -> RootDatum {
        RootDatum::build(label).unwrap()
    }

    fn x1(n: usize) -> SparsePoly {
        SparsePoly::var(n, 0)
    }

    #[test]
    fn skew_mul_examples() {
        let a1 = d("A1");
        let s1 = group_embed(&simple_reflection(&a1, AffineSimpleIndex(1)));
        assert_eq!(&s1 * &s1, SkewElement::one(2));
        let inv_x = RootFraction::inverse_form(&AffineForm::new(alloc::vec![1, 0]).unwrap());
        let a = SkewElement::term(inv_x, simple_reflection(&a1, AffineSimpleIndex(1)));
        let b = SkewElement::poly(x1(2));
        assert_eq!(&a * &b, s1.scale(&rat(-1)));
        let f = SkewElement::poly(&x1(2) + &SparsePoly::hbar(2));
        let g = SkewElement::poly(x1(2));
        assert_eq!(&f * &g, SkewElement::poly(&(&x1(2) + &SparsePoly::hbar(2)) * &x1(2)));
    }

    #[test]
    fn action_examples() {
        let a1 = d("A1");
        let e = e_mu(&a1.fundamental_weight(0));
        let out = e.act(&x1(2)).unwrap();
        assert_eq!(out.is_polynomial(), Some(&(&x1(2) - &SparsePoly::hbar(2))));
        let s1 = group_embed(&simple_reflection(&a1, AffineSimpleIndex(1)));
        assert_eq!(s1.act(&x1(2).pow(2)).unwrap().is_polynomial(), Some(&x1(2).pow(2)));
        let two = SkewElement::one(2).scale(&rat(2));
        assert_eq!(two.act(&x1(2)).unwrap().is_polynomial(), Some(&x1(2).scale(&rat(2))));
    }

    #[test]
    fn theta_actions_a1() {
        let a1 = d("A1");
        let t1 = theta_simple(&a1, AffineSimpleIndex(1)).unwrap();
        assert_eq!(t1.act(&x1(2)).unwrap().is_polynomial(), Some(&SparsePoly::integer(2, -2)));
        assert!(t1.act(&x1(2).pow(2)).unwrap().is_zero());
        let t0 = theta_simple(&a1, AffineSimpleIndex(0)).unwrap();
        // wall h - x: ((-x + 2h)^2 - x^2) / (h - x) = 4h
        let out = t0.act(&x1(2).pow(2)).unwrap();
        assert_eq!(out.is_polynomial(), Some(&SparsePoly::hbar(2).scale(&rat(4))));
        assert!(theta_simple(&a1, AffineSimpleIndex(2)).is_err());
    }

    #[test]
    fn theta_squares_to_zero() {
        for label in ["A1", "A2", "B2", "G2", "A3"] {
            let dt = d(label);
            for i in AffineSimpleIndex::all(&dt) {
                let t = theta_simple(&dt, i).unwrap();
                assert!((&t * &t).is_zero(), "{label} θ_{i}");
            }
        }
    }

    #[test]
    fn theta_root_agrees_with_direct_formula() {
        for label in ["A2", "B2", "G2"] {
            let dt = d(label);
            for root in &dt.roots {
                let via_conj = theta_root(&dt, &root.weight).unwrap();
                let form = AffineForm::from_coroot(&root.coroot, 0).unwrap();
                let refl = ExtAffineElement::from_finite(FiniteWeylElement::reflection(root));
                assert_eq!(via_conj, demazure_element(&form, refl), "{label} {:?}", root.coeffs);
            }
        }
    }

    #[test]
    fn theta_root_independent_of_conjugator() {
        let a2 = d("A2");
        let s = |i| ExtAffineElement::from_finite(FiniteWeylElement::simple_reflection(&a2, i));
        let t1 = theta_simple(&a2, AffineSimpleIndex(1)).unwrap();
        let t2 = theta_simple(&a2, AffineSimpleIndex(2)).unwrap();
        let a = conjugate(&s(0), &t2);
        let b = conjugate(&s(1), &t1);
        assert_eq!(a, b);
        let delta = theta_root(&a2, &a2.highest_root.weight).unwrap();
        assert_eq!(a, delta);
        assert!(delta.act(&x1(3)).unwrap().is_polynomial().is_some());
        assert_eq!(theta_root(&a2, &a2.simple_root(0)).unwrap(), t1);
        assert!(theta_root(&a2, &Weight(alloc::vec![1, 0])).is_err());
    }

    #[test]
    fn group_embedding_identity() {
        for label in ["A1", "A2", "G2"] {
            let dt = d(label);
            let n = dt.rank + 1;
            for i in AffineSimpleIndex::all(&dt) {
                let lhs = &SkewElement::poly(simple_form(&dt, i).to_poly()) * &theta_simple(&dt, i).unwrap();
                let lhs = &lhs + &SkewElement::one(n);
                assert_eq!(lhs, group_embed(&simple_reflection(&dt, i)));
            }
            assert_eq!(group_embed(&ExtAffineElement::identity(dt.rank)), SkewElement::one(n));
        }
        let a2 = d("A2");
        let w = word_product(&a2, &[AffineSimpleIndex(0), AffineSimpleIndex(2)]);
        let v = word_product(&a2, &[AffineSimpleIndex(1)]);
        assert_eq!(&group_embed(&w) * &group_embed(&v), group_embed(&w.mul(&v)));
    }

    #[test]
    fn ddh_examples() {
        let a1 = d("A1");
        assert!(check_ddh(&a1, &a1.fundamental_weight(0), &a1.simple_coroot(0)).unwrap());
        assert!(check_ddh(&a1, &Weight::zero(1), &a1.simple_coroot(0)).unwrap());
        let a2 = d("A2");
        assert!(check_ddh(&a2, &a2.fundamental_weight(1), &a2.simple_coroot(0)).unwrap());
        assert!(check_ddh(&a2, &Weight(alloc::vec![1]), &a2.simple_coroot(0)).is_err());
    }

    #[test]
    fn act_is_multiplicative_on_group() {
        let b2 = d("B2");
        let f = &x1(3).pow(2) + &SparsePoly::var(3, 1);
        for w in finite_group(&b2) {
            let g = group_embed(&ExtAffineElement::from_finite(w));
            let t = theta_simple(&b2, AffineSimpleIndex(0)).unwrap();
            let prod = &g * &t;
            let lhs = prod.act(&f).unwrap();
            let rhs = g.act_fraction(&t.act(&f).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}


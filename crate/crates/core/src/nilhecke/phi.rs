//! The `h = 0` algebra mapped into `W ⋉ C[T × t*][(t^α - 1)/α̌]`.
//!
//! A skew term `c [t_μ w]` goes to `t^μ c [w]` with `c` evaluated at
//! `h = 0`. At `h = 0` translations act trivially on coefficients, so this
//! is multiplicative; the generator images are the reductions of the
//! Demazure elements.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactalg::{AffineForm, RootFraction, SparsePoly, TorusMixed};
use crate::rootdata::{RootDatum, Weight};
use crate::skew::{theta_simple, SkewElement};
use crate::weyl::{AffineSimpleIndex, ExtAffineElement, FiniteWeylElement};

/// `Σ_w a_w [w]` with torus-mixed coefficients on the left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorusSkew {
    nvars: usize,
    terms: BTreeMap<FiniteWeylElement, TorusMixed>,
}

impl fmt::Debug for TorusSkew {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})·{w:?}")?;
        }
        Ok(())
    }
}

impl TorusSkew {
    pub fn zero(nvars: usize) -> Self {
        TorusSkew { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::group(nvars, FiniteWeylElement::identity(nvars - 1))
    }

    pub fn group(nvars: usize, w: FiniteWeylElement) -> Self {
        Self::term(TorusMixed::one(nvars), w)
    }

    pub fn term(c: TorusMixed, w: FiniteWeylElement) -> Self {
        let mut out = Self::zero(c.nvars());
        out.add_term(w, c);
        out
    }

    pub fn scalar(c: TorusMixed) -> Self {
        let r = c.nvars() - 1;
        Self::term(c, FiniteWeylElement::identity(r))
    }

    /// `t^μ`.
    pub fn character(nvars: usize, mu: Weight) -> Self {
        Self::scalar(TorusMixed::character(mu, RootFraction::one(nvars)))
    }

    pub fn fraction(c: RootFraction) -> Self {
        Self::scalar(TorusMixed::from_fraction(c))
    }

    pub fn poly(p: SparsePoly) -> Self {
        Self::fraction(RootFraction::from_poly(p))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FiniteWeylElement, &TorusMixed)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: FiniteWeylElement, c: TorusMixed) {
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

    pub fn try_mul(&self, rhs: &TorusSkew) -> Result<TorusSkew> {
        if self.nvars != rhs.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: rhs.nvars });
        }
        let mut out = TorusSkew::zero(self.nvars);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let moved = b.act(u)?;
                out.add_term(u.mul(v), a * &moved);
            }
        }
        Ok(out)
    }
}

impl Add for &TorusSkew {
    type Output = TorusSkew;
    fn add(self, rhs: &TorusSkew) -> TorusSkew {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &TorusSkew {
    type Output = TorusSkew;
    fn neg(self) -> TorusSkew {
        TorusSkew { nvars: self.nvars, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Sub for &TorusSkew {
    type Output = TorusSkew;
    fn sub(self, rhs: &TorusSkew) -> TorusSkew {
        self + &(-rhs)
    }
}

impl Mul for &TorusSkew {
    type Output = TorusSkew;
    fn mul(self, rhs: &TorusSkew) -> TorusSkew {
        self.try_mul(rhs).expect("operands live in the same ring")
    }
}

/// `c [t_μ w] ↦ t^μ c|_{h=0} [w]`.
pub fn reduce_at_hbar_zero(u: &SkewElement) -> Result<TorusSkew> {
    let mut out = TorusSkew::zero(u.nvars());
    for (g, c) in u.terms() {
        let c0 = c.at_hbar_zero()?;
        out.add_term(g.finite.clone(), TorusMixed::character(g.translation.clone(), c0));
    }
    Ok(out)
}

/// Image of the generator `θ_i` at `h = 0`. For a finite node this is
/// `(1/α̌_i)(s_i - 1)`; for the affine node it is
/// `(1/(-θ̌))(t^θ s_θ - 1)`.
pub fn phi_image(datum: &RootDatum, i: AffineSimpleIndex) -> Result<TorusSkew> {
    reduce_at_hbar_zero(&theta_simple(datum, i)?)
}

/// `(1/α̌)(s_α - 1)` built directly in the target algebra for a finite root.
pub fn demazure_image(datum: &RootDatum, alpha: &Weight) -> Result<TorusSkew> {
    let root = datum.root(alpha)?;
    let form = AffineForm::from_coroot(&root.coroot, 0)?;
    let inv = TorusMixed::from_fraction(RootFraction::inverse_form(&form));
    let mut out = TorusSkew::term(inv.clone(), FiniteWeylElement::reflection(root));
    out.add_term(FiniteWeylElement::identity(datum.rank), -&inv);
    Ok(out)
}

/// The affine generator image written with the highest root and no torus
/// factor, `(1/δ̌)(s_δ - 1)`. Kept for comparison; it is not compatible with
/// conjugation by length-zero elements.
pub fn highest_root_image(datum: &RootDatum) -> Result<TorusSkew> {
    demazure_image(datum, &datum.highest_root.weight)
}

/// Image of an extended affine Weyl group element.
pub fn group_image(nvars: usize, w: &ExtAffineElement) -> TorusSkew {
    TorusSkew::term(TorusMixed::character(w.translation.clone(), RootFraction::one(nvars)), w.finite.clone())
}

/// `t^μ (1/α̌)(s_α - 1) t^{-μ} s_α + (1/α̌)(s_α - 1) = (t^{<μ,α̌>α} - 1)/α̌`
/// for a simple root `α_j`.
pub fn verify_phi2(datum: &RootDatum, mu: &Weight, j: usize) -> Result<bool> {
    if j >= datum.rank {
        return Err(Error::InvalidIndex(j + 1));
    }
    let nvars = datum.rank + 1;
    let alpha = datum.simple_root(j);
    let theta = demazure_image(datum, &alpha)?;
    let s = TorusSkew::group(nvars, FiniteWeylElement::simple_reflection(datum, j));
    let t_mu = TorusSkew::character(nvars, mu.clone());
    let t_minus = TorusSkew::character(nvars, -mu);
    let lhs = &(&(&(&t_mu * &theta) * &t_minus) * &s) + &theta;

    let k = datum.pairing(mu, &datum.simple_coroot(j))?;
    let form = AffineForm::from_coroot(&datum.simple_coroot(j), 0)?;
    let inv = RootFraction::inverse_form(&form);
    let rhs = &TorusSkew::scalar(TorusMixed::character(alpha.scale(k), inv.clone()))
        - &TorusSkew::scalar(TorusMixed::from_fraction(inv));
    Ok(lhs == rhs)
}

/// `Φ(θ_i)² = 0`.
pub fn image_squares_to_zero(datum: &RootDatum, i: AffineSimpleIndex) -> Result<bool> {
    let t = phi_image(datum, i)?;
    Ok((&t * &t).is_zero())
}

/// `Φ(θ_i) s_i(ξ) - ξ Φ(θ_i) = <α_i, ξ>` for `ξ = α̌_k`, with the affine
/// node pairing as `-θ`.
pub fn image_commutation(datum: &RootDatum, i: AffineSimpleIndex, k: usize) -> Result<bool> {
    let nvars = datum.rank + 1;
    let t = phi_image(datum, i)?;
    let xi = SparsePoly::var(nvars, k);
    let finite_part = crate::weyl::simple_reflection(datum, i).finite;
    let moved = xi.substitute(&ExtAffineElement::from_finite(finite_part).substitution())?;
    let lhs = &(&t * &TorusSkew::poly(moved)) - &(&TorusSkew::poly(xi) * &t);
    let expected = super::verify::simple_pairing(datum, i, k);
    Ok(lhs == TorusSkew::poly(SparsePoly::integer(nvars, expected)))
}


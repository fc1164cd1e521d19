use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::exactalg::{Rational, SparsePoly};
use crate::weyl::ExtAffineElement;

/// `Σ f_w θ_w` with polynomial coefficients on the left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NilHeckeElement {
    nvars: usize,
    terms: BTreeMap<ExtAffineElement, SparsePoly>,
}

impl fmt::Debug for NilHeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·θ{w:?}")?;
        }
        Ok(())
    }
}

impl NilHeckeElement {
    pub fn zero(nvars: usize) -> Self {
        NilHeckeElement { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::basis(nvars, ExtAffineElement::identity(nvars - 1))
    }

    /// `θ_w`.
    pub fn basis(nvars: usize, w: ExtAffineElement) -> Self {
        Self::term(w, SparsePoly::one(nvars))
    }

    /// `f θ_w`.
    pub fn term(w: ExtAffineElement, f: SparsePoly) -> Self {
        let mut out = Self::zero(f.nvars());
        out.add_term(w, f);
        out
    }

    /// `f θ_id`.
    pub fn poly(f: SparsePoly) -> Self {
        let r = f.nvars() - 1;
        Self::term(ExtAffineElement::identity(r), f)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExtAffineElement, SparsePoly)>) -> Self {
        let mut out = Self::zero(nvars);
        for (w, f) in terms {
            out.add_term(w, f);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtAffineElement, &SparsePoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &ExtAffineElement) -> SparsePoly {
        self.terms.get(w).cloned().unwrap_or_else(|| SparsePoly::zero(self.nvars))
    }

    pub fn add_term(&mut self, w: ExtAffineElement, f: SparsePoly) {
        if f.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            None => {
                self.terms.insert(w, f);
            }
            Some(old) => {
                let sum = &old + &f;
                if !sum.is_zero() {
                    self.terms.insert(w, sum);
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        NilHeckeElement {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(w, f)| (w.clone(), f.scale(c))).collect(),
        }
    }

    /// `g · Σ f_w θ_w = Σ (g f_w) θ_w`.
    pub fn left_mul_poly(&self, g: &SparsePoly) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(w, f)| (w.clone(), g * f)))
    }

    /// Substitutes `h = c` in every coefficient.
    pub fn specialize(&self, c: &Rational) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(w, f)| (w.clone(), f.specialize_hbar(c))))
    }

    pub fn is_hbar_free(&self) -> bool {
        self.terms.values().all(SparsePoly::is_hbar_free)
    }
}

impl Add for &NilHeckeElement {
    type Output = NilHeckeElement;
    fn add(self, rhs: &NilHeckeElement) -> NilHeckeElement {
        let mut out = self.clone();
        for (w, f) in &rhs.terms {
            out.add_term(w.clone(), f.clone());
        }
        out
    }
}

impl Neg for &NilHeckeElement {
    type Output = NilHeckeElement;
    fn neg(self) -> NilHeckeElement {
        NilHeckeElement {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(w, f)| (w.clone(), -f)).collect(),
        }
    }
}

impl Sub for &NilHeckeElement {
    type Output = NilHeckeElement;
    fn sub(self, rhs: &NilHeckeElement) -> NilHeckeElement {
        self + &(-rhs)
    }
}

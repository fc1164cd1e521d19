use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{RootFraction, SparsePoly};
use crate::error::Result;
use crate::rootdata::Weight;
use crate::weyl::{ExtAffineElement, FiniteWeylElement};

/// A finite sum `Σ_μ t^μ · c_μ` of torus characters with root-fraction
/// coefficients in the `x` variables (the ring `C[T × t*]` with the
/// quotients `(t^α - 1)/α̌` adjoined).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorusMixed {
    nvars: usize,
    terms: BTreeMap<Weight, RootFraction>,
}

impl fmt::Debug for TorusMixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mu, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "t^{:?}·[{c}]", mu.0)?;
        }
        Ok(())
    }
}

impl TorusMixed {
    pub fn zero(nvars: usize) -> Self {
        TorusMixed { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::character(Weight::zero(nvars - 1), RootFraction::one(nvars))
    }

    /// `t^μ · c`.
    pub fn character(mu: Weight, c: RootFraction) -> Self {
        let nvars = c.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mu, c);
        }
        TorusMixed { nvars, terms }
    }

    pub fn from_fraction(c: RootFraction) -> Self {
        let r = c.nvars() - 1;
        Self::character(Weight::zero(r), c)
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        Self::from_fraction(RootFraction::from_poly(p))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &RootFraction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Weight) -> RootFraction {
        self.terms.get(mu).cloned().unwrap_or_else(|| RootFraction::zero(self.nvars))
    }

    fn add_term(&mut self, mu: Weight, c: RootFraction) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&mu) {
            None => {
                self.terms.insert(mu, c);
            }
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert(mu, sum);
                }
            }
        }
    }

    /// `w ▷ (t^μ c) = t^{wμ} (w ▷ c)`.
    pub fn act(&self, w: &FiniteWeylElement) -> Result<TorusMixed> {
        let sub = ExtAffineElement::from_finite(w.clone()).substitution();
        let mut out = TorusMixed::zero(self.nvars);
        for (mu, c) in &self.terms {
            out.add_term(w.act_weight(mu), c.substitute(&sub)?);
        }
        Ok(out)
    }
}

impl Add for &TorusMixed {
    type Output = TorusMixed;
    fn add(self, rhs: &TorusMixed) -> TorusMixed {
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }
}

impl Neg for &TorusMixed {
    type Output = TorusMixed;
    fn neg(self) -> TorusMixed {
        TorusMixed {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &TorusMixed {
    type Output = TorusMixed;
    fn sub(self, rhs: &TorusMixed) -> TorusMixed {
        self + &(-rhs)
    }
}

impl Mul for &TorusMixed {
    type Output = TorusMixed;
    fn mul(self, rhs: &TorusMixed) -> TorusMixed {
        torus_mul(self, rhs)
    }
}

/// `t^μ · t^ν = t^{μ+ν}`, extended bilinearly.
pub fn torus_mul(a: &TorusMixed, b: &TorusMixed) -> TorusMixed {
    let mut out = TorusMixed::zero(a.nvars);
    for (mu, c) in &a.terms {
        for (nu, d) in &b.terms {
            out.add_term(mu + nu, c * d);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::AffineForm;

    #[test]
    fn torus_mul_examples() {
        let n = 2;
        let t = |k: i64| TorusMixed::character(Weight(alloc::vec![k]), RootFraction::one(n));
        assert_eq!(torus_mul(&t(1), &t(-1)), TorusMixed::one(n));
        let ta_minus_1 = &t(2) - &TorusMixed::one(n);
        assert_eq!(torus_mul(&ta_minus_1, &TorusMixed::one(n)), ta_minus_1);
        let x = AffineForm::new(alloc::vec![1, 0]).unwrap();
        let quotient = TorusMixed::character(Weight(alloc::vec![2]), RootFraction::inverse_form(&x));
        let quotient = &quotient - &TorusMixed::from_fraction(RootFraction::inverse_form(&x));
        let cleared = torus_mul(&quotient, &TorusMixed::from_poly(SparsePoly::var(n, 0)));
        assert_eq!(cleared, ta_minus_1);
    }
}

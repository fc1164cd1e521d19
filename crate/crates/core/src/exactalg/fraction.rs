use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat, AffineForm, LinearSubstitution, Rational, SparsePoly};
use crate::error::{Error, Result};

/// A polynomial divided by a product of affine root forms.
///
/// Forms are primitive with positive leading coefficient and the fraction is
/// fully reduced: no denominator form divides the numerator. Since distinct
/// normalized forms are distinct primes, two reduced fractions are equal iff
/// they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootFraction {
    num: SparsePoly,
    den: BTreeMap<AffineForm, u32>,
}

impl fmt::Debug for RootFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RootFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})/", self.num)?;
        } else {
            write!(f, "{}/", self.num)?;
        }
        for (form, &m) in &self.den {
            if m == 1 {
                write!(f, "({form})")?;
            } else {
                write!(f, "({form})^{m}")?;
            }
        }
        Ok(())
    }
}

impl RootFraction {
    pub fn zero(nvars: usize) -> Self {
        RootFraction { num: SparsePoly::zero(nvars), den: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(SparsePoly::one(nvars))
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        RootFraction { num: p, den: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_poly(SparsePoly::constant(nvars, c))
    }

    /// `num / Π den`, normalized and reduced.
    pub fn new(num: SparsePoly, den: impl IntoIterator<Item = AffineForm>) -> Result<Self> {
        let mut scalar = Rational::one();
        let mut map = BTreeMap::new();
        for form in den {
            if form.nvars() != num.nvars() {
                return Err(Error::DimensionMismatch { expected: num.nvars(), found: form.nvars() });
            }
            let (s, f) = form.normalize();
            scalar *= rat(s);
            *map.entry(f).or_insert(0) += 1;
        }
        let mut out = RootFraction { num: num.scale(&scalar.recip()), den: map };
        out.reduce_in_place();
        Ok(out)
    }

    /// `1 / form`.
    pub fn inverse_form(form: &AffineForm) -> Self {
        let n = form.nvars();
        Self::new(SparsePoly::one(n), [form.clone()]).expect("form matches its own ring")
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.num
    }

    pub fn denominator(&self) -> impl Iterator<Item = (&AffineForm, u32)> {
        self.den.iter().map(|(f, &m)| (f, m))
    }

    /// Denominator as a flat multiset.
    pub fn denominator_forms(&self) -> Vec<AffineForm> {
        self.den
            .iter()
            .flat_map(|(f, &m)| core::iter::repeat_n(f.clone(), m as usize))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num == SparsePoly::one(self.nvars())
    }

    /// Present iff the reduced denominator is empty.
    pub fn is_polynomial(&self) -> Option<&SparsePoly> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn into_polynomial(self) -> core::result::Result<SparsePoly, RootFraction> {
        if self.den.is_empty() {
            Ok(self.num)
        } else {
            Err(self)
        }
    }

    /// Returns the fully reduced form of `self`.
    pub fn reduce(&self) -> RootFraction {
        let mut out = self.clone();
        out.reduce_in_place();
        out
    }

    fn reduce_in_place(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let forms: Vec<AffineForm> = self.den.keys().cloned().collect();
        for form in forms {
            let mult = self.den[&form];
            let mut removed = 0;
            while removed < mult {
                match self.num.exact_divide(&form) {
                    Some(q) => {
                        self.num = q;
                        removed += 1;
                    }
                    None => break,
                }
            }
            if removed == mult {
                self.den.remove(&form);
            } else if removed > 0 {
                self.den.insert(form, mult - removed);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> RootFraction {
        if c.is_zero() {
            return RootFraction::zero(self.nvars());
        }
        RootFraction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &SparsePoly) -> RootFraction {
        let mut out = RootFraction { num: &self.num * p, den: self.den.clone() };
        out.reduce_in_place();
        out
    }

    /// Image under a linear change of variables. A ring automorphism keeps
    /// distinct forms distinct and preserves reducedness.
    pub fn substitute(&self, sub: &LinearSubstitution) -> Result<RootFraction> {
        if sub.is_identity() {
            return Ok(self.clone());
        }
        let mut num = self.num.substitute(sub)?;
        let mut den = BTreeMap::new();
        let mut scalar = Rational::one();
        for (form, &m) in &self.den {
            let (s, f) = form.substitute(sub).normalize();
            for _ in 0..m {
                scalar *= rat(s);
            }
            *den.entry(f).or_insert(0) += m;
        }
        if !scalar.is_one() {
            num = num.scale(&scalar.recip());
        }
        let mut out = RootFraction { num, den };
        if out.den.len() != self.den.len() {
            out.reduce_in_place();
        }
        Ok(out)
    }

    /// Inverse of a fraction whose numerator is a nonzero constant.
    pub fn inverse_monomial(&self) -> Result<RootFraction> {
        let c = self.num.as_constant().ok_or(Error::NotInvertible)?;
        if c.is_zero() {
            return Err(Error::NotInvertible);
        }
        let mut p = SparsePoly::constant(self.nvars(), c.recip());
        for (form, &m) in &self.den {
            let fp = form.to_poly();
            for _ in 0..m {
                p = &p * &fp;
            }
        }
        Ok(RootFraction::from_poly(p))
    }

    /// Value at `h = 0`. Fails if some denominator form vanishes there.
    pub fn at_hbar_zero(&self) -> Result<RootFraction> {
        let num = self.num.specialize_hbar(&Rational::zero());
        let mut forms = Vec::new();
        for f in self.denominator_forms() {
            forms.push(f.at_hbar_zero().ok_or(Error::ZeroForm)?);
        }
        RootFraction::new(num, forms)
    }

    fn scaled_to(&self, target: &BTreeMap<AffineForm, u32>) -> SparsePoly {
        let mut num = self.num.clone();
        for (form, &m) in target {
            let have = self.den.get(form).copied().unwrap_or(0);
            let fp = form.to_poly();
            for _ in have..m {
                num = &num * &fp;
            }
        }
        num
    }
}

impl Add for &RootFraction {
    type Output = RootFraction;
    fn add(self, rhs: &RootFraction) -> RootFraction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let mut out = if self.den == rhs.den {
            RootFraction { num: &self.num + &rhs.num, den: self.den.clone() }
        } else {
            let mut lcm = self.den.clone();
            for (f, &m) in &rhs.den {
                let e = lcm.entry(f.clone()).or_insert(0);
                *e = (*e).max(m);
            }
            let num = &self.scaled_to(&lcm) + &rhs.scaled_to(&lcm);
            RootFraction { num, den: lcm }
        };
        out.reduce_in_place();
        out
    }
}

impl Neg for &RootFraction {
    type Output = RootFraction;
    fn neg(self) -> RootFraction {
        RootFraction { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RootFraction {
    type Output = RootFraction;
    fn sub(self, rhs: &RootFraction) -> RootFraction {
        self + &(-rhs)
    }
}

impl Mul for &RootFraction {
    type Output = RootFraction;
    fn mul(self, rhs: &RootFraction) -> RootFraction {
        if self.is_zero() || rhs.is_zero() {
            return RootFraction::zero(self.nvars());
        }
        let mut den = self.den.clone();
        for (f, &m) in &rhs.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        let mut out = RootFraction { num: &self.num * &rhs.num, den };
        if !self.den.is_empty() || !rhs.den.is_empty() {
            out.reduce_in_place();
        }
        out
    }
}

/// Free function form of [`RootFraction::reduce`].
pub fn reduce(f: &RootFraction) -> RootFraction {
    f.reduce()
}

/// Free function form of [`RootFraction::is_polynomial`].
pub fn is_polynomial(f: &RootFraction) -> Option<SparsePoly> {
    f.is_polynomial().cloned()
}

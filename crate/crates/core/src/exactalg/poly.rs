use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, Rational};
use crate::error::{Error, Result};

/// Exponent vector over `x_1, .., x_r, h` (the last slot is `h`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Graded lexicographic order with `x_1 > x_2 > .. > h`, largest first.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

/// Sparse polynomial in `x_1..x_r` and `h` with rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn integer(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, rat(c))
    }

    pub fn one(nvars: usize) -> Self {
        Self::integer(nvars, 1)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { nvars, terms }
    }

    /// The variable `x_{i+1}`, or `h` for `i = nvars - 1`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Rational::one())
    }

    pub fn hbar(nvars: usize) -> Self {
        Self::var(nvars, nvars - 1)
    }

    /// `Σ coeffs[i] * var_i` over all variables including `h`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                p.terms.insert(Monomial::var(n, i), rat(c));
            }
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if m.0.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: m.0.len() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded lexicographic order (largest first).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.grlex_cmp(b.0));
        v
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_parts(&self) -> BTreeMap<u32, SparsePoly> {
        let mut out: BTreeMap<u32, SparsePoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| SparsePoly::zero(self.nvars))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &SparsePoly, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * scale);
        }
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut out = SparsePoly::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Ring homomorphism induced by a linear change of variables.
    pub fn substitute(&self, sub: &LinearSubstitution) -> Result<SparsePoly> {
        if sub.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: sub.nvars() });
        }
        if sub.is_identity() {
            return Ok(self.clone());
        }
        let images: Vec<SparsePoly> = (0..self.nvars).map(|i| SparsePoly::linear(&sub.rows[i])).collect();
        let mut powers: Vec<Vec<SparsePoly>> = images.iter().map(|p| vec![SparsePoly::one(self.nvars), p.clone()]).collect();
        let mut out = SparsePoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut term = SparsePoly::constant(self.nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = usize::from(e);
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Substitutes `h = c`; the `h` slot is kept (with exponent zero).
    pub fn specialize_hbar(&self, c: &Rational) -> SparsePoly {
        let h = self.nvars - 1;
        let mut out = SparsePoly::zero(self.nvars);
        for (m, a) in &self.terms {
            let e = m.0[h];
            let mut scaled = a.clone();
            if e > 0 {
                scaled *= num_traits::pow(c.clone(), usize::from(e));
            }
            let mut m2 = m.clone();
            m2.0[h] = 0;
            out.add_term(m2, scaled);
        }
        out
    }

    pub fn is_hbar_free(&self) -> bool {
        let h = self.nvars - 1;
        self.terms.keys().all(|m| m.0[h] == 0)
    }

    /// Evaluates at an integer point (all variables including `h`).
    pub fn eval(&self, point: &[i64]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (e, &p) in m.0.iter().zip(point) {
                if *e > 0 {
                    v *= rat(p.pow(u32::from(*e)));
                }
            }
            total += v;
        }
        total
    }

    /// Exact quotient by an affine form, or `None` when the form does not
    /// divide.
    pub fn exact_divide(&self, form: &super::AffineForm) -> Option<SparsePoly> {
        assert_eq!(form.nvars(), self.nvars, "form and polynomial live in different rings");
        if self.is_zero() {
            return Some(self.clone());
        }
        let coeffs = form.coeffs();
        // Pivot on the first variable with a unit coefficient if there is one.
        let v = coeffs
            .iter()
            .position(|&c| c.abs() == 1)
            .or_else(|| coeffs.iter().position(|&c| c != 0))
            .expect("affine forms are nonzero");
        let c = rat(coeffs[v]);
        let c_inv = c.recip();
        let mut rest_coeffs = coeffs.to_vec();
        rest_coeffs[v] = 0;
        let rest = SparsePoly::linear(&rest_coeffs);

        // Split p = Σ_e v^e P_e.
        let mut slices: BTreeMap<u16, SparsePoly> = BTreeMap::new();
        for (m, a) in &self.terms {
            let e = m.0[v];
            let mut m2 = m.clone();
            m2.0[v] = 0;
            slices
                .entry(e)
                .or_insert_with(|| SparsePoly::zero(self.nvars))
                .terms
                .insert(m2, a.clone());
        }
        let top = *slices.keys().next_back().unwrap();
        if top == 0 {
            return None;
        }
        // p = (c v + L) q with q = Σ v^e Q_e gives P_e = c Q_{e-1} + L Q_e.
        let mut quotient = SparsePoly::zero(self.nvars);
        let mut q_prev = SparsePoly::zero(self.nvars);
        for e in (1..=top).rev() {
            let mut p_e = slices.remove(&e).unwrap_or_else(|| SparsePoly::zero(self.nvars));
            if !q_prev.is_zero() {
                p_e = &p_e - &(&rest * &q_prev);
            }
            let q = p_e.scale(&c_inv);
            let mut shift = Monomial::one(self.nvars);
            shift.0[v] = e - 1;
            quotient = &quotient + &q.mul_monomial(&shift, &Rational::one());
            q_prev = q;
        }
        let p0 = slices.remove(&0).unwrap_or_else(|| SparsePoly::zero(self.nvars));
        let remainder = &p0 - &(&rest * &q_prev);
        remainder.is_zero().then_some(quotient)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.terms.is_empty() {
            s.push('0');
            return s;
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            let is_const = m.degree() == 0;
            if is_const || !abs.is_one() {
                factors.push(alloc::format!("{abs}"));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(alloc::format!("{}^{}", names[i], e)),
                }
            }
            let _ = write!(s, "{}", factors.join("*"));
        }
        s
    }

    pub fn variable_names(nvars: usize) -> Vec<String> {
        let mut names: Vec<String> = (1..nvars).map(|i| alloc::format!("x{i}")).collect();
        names.push(String::from("h"));
        names
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&Self::variable_names(self.nvars)))
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

/// Integer linear change of variables: variable `i` is replaced by
/// `Σ_j rows[i][j] * var_j`. The last variable is `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSubstitution {
    rows: Vec<Vec<i64>>,
}

impl LinearSubstitution {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        Ok(LinearSubstitution { rows })
    }

    pub fn identity(nvars: usize) -> Self {
        LinearSubstitution {
            rows: (0..nvars).map(|i| (0..nvars).map(|j| i64::from(i == j)).collect()).collect(),
        }
    }

    /// `x ↦ A x + h b` on the `x` variables, `h ↦ h`.
    pub fn affine(a: &[Vec<i64>], b: &[i64]) -> Result<Self> {
        let r = a.len();
        if b.len() != r {
            return Err(Error::DimensionMismatch { expected: r, found: b.len() });
        }
        let mut rows = Vec::with_capacity(r + 1);
        for (row, &bi) in a.iter().zip(b) {
            if row.len() != r {
                return Err(Error::DimensionMismatch { expected: r, found: row.len() });
            }
            let mut full = row.clone();
            full.push(bi);
            rows.push(full);
        }
        let mut h = vec![0; r + 1];
        h[r] = 1;
        rows.push(h);
        Ok(LinearSubstitution { rows })
    }

    pub fn nvars(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
    }

    /// Image of the linear form with coefficient row `c`: `c · rows`.
    pub fn apply_row(&self, c: &[i64]) -> Vec<i64> {
        let n = self.nvars();
        let mut out = vec![0i64; n];
        for (ci, row) in c.iter().zip(&self.rows) {
            if *ci == 0 {
                continue;
            }
            for j in 0..n {
                out[j] += ci * row[j];
            }
        }
        out
    }
}

/// Free function form of [`SparsePoly::substitute`].
pub fn substitute_linear(p: &SparsePoly, map: &LinearSubstitution) -> Result<SparsePoly> {
    p.substitute(map)
}

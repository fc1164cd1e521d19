//! Decompositions `1 = Σ h'_k e h''_k` of the unit through the symmetrizer.
//!
//! Candidates are `h' = x^a` and `h'' = θ_w x^b` with `w` in the finite Weyl
//! group and `|a| + |b| = ℓ(w)`, so every product is homogeneous of degree
//! zero. For each degree bound in turn the candidates are tried first with
//! `b = 0`, then with all splittings, and the coefficients come from an
//! exact linear solve.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Rational, SparsePoly};
use crate::linalg::Matrix;
use crate::weyl::ExtAffineElement;

use super::verify::monomials_of_degree;
use super::{NilHecke, NilHeckeElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoritaUnit {
    pub pairs: Vec<(NilHeckeElement, NilHeckeElement)>,
    /// Degree bound at which the decomposition was found.
    pub degree: usize,
}

impl MoritaUnit {
    /// `Σ h' e h''`.
    pub fn sum(&self, nh: &NilHecke) -> Result<NilHeckeElement> {
        let e = nh.symmetrizer();
        let mut total = NilHeckeElement::zero(nh.nvars());
        for (left, right) in &self.pairs {
            let prod = nh.mul(&nh.mul(left, &e)?, right)?;
            total = &total + &prod;
        }
        Ok(total)
    }

    pub fn verify(&self, nh: &NilHecke) -> Result<bool> {
        Ok(self.sum(nh)? == NilHeckeElement::one(nh.nvars()))
    }
}

struct Candidate {
    left: NilHeckeElement,
    right: NilHeckeElement,
}

fn monomial_poly(m: Monomial) -> SparsePoly {
    SparsePoly::monomial(m, Rational::from_integer(1.into()))
}

fn candidates(nh: &NilHecke, bound: usize, split_right: bool) -> Result<Vec<Candidate>> {
    let nvars = nh.nvars();
    let rank = nh.rank();
    let mut out = Vec::new();
    let basis: Vec<ExtAffineElement> = nh.finite_basis();
    for w in basis {
        let l = nh.length(&w);
        if l > bound {
            continue;
        }
        let theta = NilHeckeElement::basis(nvars, w.clone());
        let right_degrees: Vec<usize> = if split_right { (0..=l).collect() } else { alloc::vec![0] };
        for b in right_degrees {
            for a_mono in monomials_of_degree(rank, (l - b) as u32) {
                for b_mono in monomials_of_degree(rank, b as u32) {
                    let left = NilHeckeElement::poly(monomial_poly(a_mono.clone()));
                    let right = nh.mul(&theta, &NilHeckeElement::poly(monomial_poly(b_mono)))?;
                    out.push(Candidate { left, right });
                }
            }
        }
    }
    Ok(out)
}

fn solve(nh: &NilHecke, family: &[Candidate]) -> Result<Option<Vec<Rational>>> {
    let e = nh.symmetrizer();
    let nvars = nh.nvars();
    let mut index: BTreeMap<(ExtAffineElement, Monomial), usize> = BTreeMap::new();
    let mut columns: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(family.len());
    for cand in family {
        let prod = nh.mul(&nh.mul(&cand.left, &e)?, &cand.right)?;
        let mut col = Vec::new();
        for (w, f) in prod.terms() {
            for (m, c) in f.terms() {
                let next = index.len();
                let row = *index.entry((w.clone(), m.clone())).or_insert(next);
                col.push((row, c.clone()));
            }
        }
        columns.push(col);
    }
    let unit_key = (ExtAffineElement::identity(nh.rank()), Monomial::one(nvars));
    let next = index.len();
    let unit_row = *index.entry(unit_key).or_insert(next);
    let mut a = Matrix::zeros(index.len(), family.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col {
            a[(*i, j)] = c.clone();
        }
    }
    let mut rhs = alloc::vec![Rational::zero(); index.len()];
    rhs[unit_row] = Rational::from_integer(1.into());
    Ok(a.solve(&rhs))
}

/// Searches degree bounds `0..=max_degree` for a decomposition of the unit.
pub fn morita_unit(nh: &NilHecke, max_degree: usize) -> Result<MoritaUnit> {
    for bound in 0..=max_degree {
        for split_right in [false, true] {
            let family = candidates(nh, bound, split_right)?;
            if let Some(coeffs) = solve(nh, &family)? {
                let pairs = family
                    .into_iter()
                    .zip(coeffs)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(cand, c)| (cand.left.scale(&c), cand.right))
                    .collect();
                return Ok(MoritaUnit { pairs, degree: bound });
            }
        }
    }
    Err(Error::NoSolution(max_degree))
}

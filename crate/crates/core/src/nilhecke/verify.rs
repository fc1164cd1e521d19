//! Exact checks of the defining relations and structural identities.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::exactalg::{Monomial, Rational, RootFraction, SparsePoly};
use crate::linalg::Matrix;
use crate::rootdata::{find_weight_pairing_one, RootDatum, Weight};
use crate::skew::{conjugate, e_mu, theta_root, theta_simple, SkewElement};
use crate::weyl::{finite_group, simple_reflection, AffineSimpleIndex, ExtAffineElement};

use super::{straighten, NilHecke, NilHeckeElement};

/// `<α_i, α̌_k>`, with `α_0` pairing as `-θ` on `t`.
pub fn simple_pairing(datum: &RootDatum, i: AffineSimpleIndex, k: usize) -> i64 {
    match i.finite() {
        Some(j) => datum.cartan[k][j],
        None => -datum.affine_root.weight.0[k],
    }
}

/// Outcome of one braid or nil relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub nodes: (AffineSimpleIndex, AffineSimpleIndex),
    /// Order of `s_i s_j`, or 0 for the square relation `θ_i² = 0`.
    pub order: usize,
    pub holds: bool,
}

/// Order of `s_i s_j` in the affine Weyl group, `None` when infinite.
pub fn braid_order(datum: &RootDatum, i: AffineSimpleIndex, j: AffineSimpleIndex) -> Option<usize> {
    let p = simple_reflection(datum, i).mul(&simple_reflection(datum, j));
    let mut q = p.clone();
    for m in 1..=6 {
        if q.is_identity() {
            return Some(m);
        }
        q = q.mul(&p);
    }
    None
}

fn alternating(datum: &RootDatum, first: AffineSimpleIndex, second: AffineSimpleIndex, m: usize) -> Result<SkewElement> {
    let a = theta_simple(datum, first)?;
    let b = theta_simple(datum, second)?;
    let mut out = SkewElement::one(datum.rank + 1);
    for k in 0..m {
        out = &out * if k % 2 == 0 { &a } else { &b };
    }
    Ok(out)
}

/// `θ_i² = 0` for every node and the braid relation of length `m_ij` for
/// every pair of distinct nodes with `m_ij` finite.
pub fn check_braid(datum: &RootDatum) -> Result<Vec<RelationCheck>> {
    let nodes: Vec<_> = AffineSimpleIndex::all(datum).collect();
    let mut out = Vec::new();
    for &i in &nodes {
        let t = theta_simple(datum, i)?;
        out.push(RelationCheck { nodes: (i, i), order: 0, holds: (&t * &t).is_zero() });
    }
    for (a, &i) in nodes.iter().enumerate() {
        for &j in &nodes[a + 1..] {
            if let Some(m) = braid_order(datum, i, j) {
                let holds = alternating(datum, i, j, m)? == alternating(datum, j, i, m)?;
                out.push(RelationCheck { nodes: (i, j), order: m, holds });
            }
        }
    }
    Ok(out)
}

/// What the relation `θ_i s_i(ξ) - ξ θ_i = <α_i, ξ>` is tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Probe {
    Coroot(usize),
    Hbar,
}

/// `θ_i · s_i(ξ) - ξ · θ_i = <α_i, ξ>` in the skew algebra.
pub fn check_defrel(datum: &RootDatum, i: AffineSimpleIndex, probe: Probe) -> Result<bool> {
    let nvars = datum.rank + 1;
    let (xi, expected) = match probe {
        Probe::Coroot(k) => (SparsePoly::var(nvars, k), simple_pairing(datum, i, k)),
        Probe::Hbar => (SparsePoly::hbar(nvars), 0),
    };
    let s = simple_reflection(datum, i);
    let moved = xi.substitute(&s.substitution())?;
    let t = theta_simple(datum, i)?;
    let lhs = &(&t * &SkewElement::poly(moved)) - &(&SkewElement::poly(xi) * &t);
    Ok(lhs == SkewElement::poly(SparsePoly::integer(nvars, expected)))
}

/// Both sides of the conjugation identity for the affine generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Th0Check {
    pub mu: Weight,
    pub lhs: SkewElement,
    pub rhs: SkewElement,
}

impl Th0Check {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn conjugation_check(datum: &RootDatum, root: &Weight, paired: &Weight) -> Result<Th0Check> {
    let mu = find_weight_pairing_one(&datum.root(paired)?.coroot)?;
    let theta = theta_root(datum, root)?;
    let lhs = conjugate(&ExtAffineElement::translation(mu.clone()), &theta);
    let rhs = theta_simple(datum, AffineSimpleIndex(0))?;
    Ok(Th0Check { mu, lhs, rhs })
}

/// `e^μ θ_δ e^{-μ}` against `θ_0` for the highest root `δ` and a weight
/// with `<μ, δ̌> = 1`.
pub fn verify_th0(datum: &RootDatum) -> Result<Th0Check> {
    conjugation_check(datum, &datum.highest_root.weight, &datum.highest_root.weight)
}

/// `e^μ θ_{-θ} e^{-μ}` against `θ_0`, where `θ` is the root defining the
/// affine node and `<μ, θ̌> = 1`.
pub fn verify_affine_conjugation(datum: &RootDatum) -> Result<Th0Check> {
    conjugation_check(datum, &-&datum.affine_root.weight, &datum.affine_root.weight)
}

/// `ξ e^μ = e^μ (ξ + <μ, ξ> h)` for every fundamental weight and simple
/// coroot.
pub fn check_ddh_all(datum: &RootDatum) -> Result<Vec<(usize, usize, bool)>> {
    let mut out = Vec::new();
    for m in 0..datum.rank {
        for k in 0..datum.rank {
            let ok = crate::skew::check_ddh(datum, &datum.fundamental_weight(m), &datum.simple_coroot(k))?;
            out.push((m, k, ok));
        }
    }
    Ok(out)
}

/// `ξ` and `e^μ` commute once `h = 0`.
pub fn ddh_at_zero(datum: &RootDatum, mu: &Weight, k: usize) -> Result<bool> {
    let nvars = datum.rank + 1;
    let xi = SkewElement::poly(SparsePoly::var(nvars, k));
    let e = e_mu(mu);
    Ok(xi.mul_hbar_zero(&e)? == e.mul_hbar_zero(&xi)?)
}

/// All monomials in `x_1..x_r` of total degree at most `d`.
pub fn monomials_up_to(rank: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; rank + 1];
    fn rec(k: usize, rank: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if k == rank {
            out.push(Monomial(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[k] = e as u16;
            rec(k + 1, rank, left - e, exps, out);
        }
        exps[k] = 0;
    }
    rec(0, rank, d, &mut exps, &mut out);
    out.sort_by(|a, b| a.grlex_cmp(b));
    out
}

/// Monomials of total degree exactly `d`.
pub fn monomials_of_degree(rank: usize, d: u32) -> Vec<Monomial> {
    monomials_up_to(rank, d).into_iter().filter(|m| m.degree() == d).collect()
}

/// Rank of the evaluation map from `{x^a θ_w : |a| ≤ max_coeff, w ∈ W}`
/// to operators on polynomials of degree `≤ max_test`, and the number of
/// spanning elements.
pub fn faithfulness_rank(nh: &NilHecke, max_coeff: u32, max_test: u32) -> Result<(usize, usize)> {
    let datum = nh.datum();
    let tests = monomials_up_to(datum.rank, max_test);
    let mut columns: alloc::collections::BTreeMap<(usize, Monomial), usize> = Default::default();
    let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
    for w in nh.finite_basis() {
        for a in monomials_up_to(datum.rank, max_coeff) {
            let elem = NilHeckeElement::term(w.clone(), SparsePoly::monomial(a, Rational::from_integer(1.into())));
            let mut row = Vec::new();
            for (t, g) in tests.iter().enumerate() {
                let g = SparsePoly::monomial(g.clone(), Rational::from_integer(1.into()));
                let image = straighten::act_on_poly(datum, &elem, &g)?;
                for (m, c) in image.terms() {
                    let next = columns.len();
                    let col = *columns.entry((t, m.clone())).or_insert(next);
                    row.push((col, c.clone()));
                }
            }
            rows.push(row);
        }
    }
    let mut m = Matrix::zeros(rows.len(), columns.len());
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row {
            m[(i, *j)] = c.clone();
        }
    }
    Ok((m.rank(), rows.len()))
}

/// `Σ_{w ∈ W} w ▷ f`.
pub fn symmetrize(datum: &RootDatum, f: &SparsePoly) -> Result<SparsePoly> {
    let mut out = SparsePoly::zero(f.nvars());
    for w in finite_group(datum) {
        out = &out + &f.substitute(&ExtAffineElement::from_finite(w).substitution())?;
    }
    Ok(out)
}

/// A spanning set of the `W`-invariant polynomials of degree `≤ d`.
pub fn invariant_polynomials(datum: &RootDatum, d: u32) -> Result<Vec<SparsePoly>> {
    let mut out: Vec<SparsePoly> = Vec::new();
    for m in monomials_up_to(datum.rank, d) {
        let f = symmetrize(datum, &SparsePoly::monomial(m, Rational::from_integer(1.into())))?;
        if !f.is_zero() && !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

/// `f θ_i = θ_i f` in the skew algebra for a polynomial `f`.
pub fn commutes_with_theta(datum: &RootDatum, f: &SparsePoly, i: AffineSimpleIndex) -> Result<bool> {
    let t = theta_simple(datum, i)?;
    let p = SkewElement::poly(f.clone());
    Ok(&p * &t == &t * &p)
}

/// `membership(θ_w) = {w ↦ 1}` in the generic and in the `h = 0` algebra.
pub fn check_freeness(nh: &NilHecke, w: &ExtAffineElement) -> (bool, bool) {
    let expected = nh.theta_basis(w.clone());
    let generic = nh.membership(&nh.theta(w)).map(|u| u == expected).unwrap_or(false);
    let zero = nh.membership_at_zero(&nh.theta_at_zero(w)).map(|u| u == expected).unwrap_or(false);
    (generic, zero)
}

/// `(1/form)·[id]` for the coroot of a root.
pub fn inverse_root_scalar(datum: &RootDatum, root: &Weight) -> Result<SkewElement> {
    let coroot = &datum.root(root)?.coroot;
    let form = crate::exactalg::AffineForm::from_coroot(coroot, 0)?;
    Ok(SkewElement::scalar(RootFraction::inverse_form(&form)))
}

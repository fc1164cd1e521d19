//! Finite slices of graded `Sym t ⋊ W` modules and the criterion for
//! extending the action to Demazure elements.
//!
//! `θ_α` exists on `M` exactly when multiplication by `α̌` maps the
//! `s_α`-invariants of degree `d` bijectively onto the anti-invariants of
//! degree `d + 1`; then `θ_α(m) = α̌⁻¹(s_α m - m)`. On a slice truncated at
//! degree `D` only the range `d < D` can be examined.

use alloc::format;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Rational, SparsePoly};
use crate::linalg::Matrix;
use crate::rootdata::RootDatum;
use crate::weyl::{finite_group, ExtAffineElement, FiniteWeylElement};

use super::verify::monomials_of_degree;

/// Matrices act on column vectors; `reflections[i][d]` is `s_i` on `M_d`
/// and `multiplications[k][d]` is `x_k : M_d → M_{d+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModuleSlice {
    dims: Vec<usize>,
    reflections: Vec<Vec<Matrix>>,
    multiplications: Vec<Vec<Matrix>>,
}

impl GradedModuleSlice {
    pub fn new(dims: Vec<usize>, reflections: Vec<Vec<Matrix>>, multiplications: Vec<Vec<Matrix>>) -> Result<Self> {
        let m = GradedModuleSlice { dims, reflections, multiplications };
        m.check_shapes()?;
        Ok(m)
    }

    fn check_shapes(&self) -> Result<()> {
        if self.dims.is_empty() {
            return Err(Error::MalformedSlice("no degrees".into()));
        }
        let top = self.top();
        for (i, per_degree) in self.reflections.iter().enumerate() {
            if per_degree.len() != self.dims.len() {
                return Err(Error::MalformedSlice(format!("s_{} has {} degrees", i + 1, per_degree.len())));
            }
            for (d, s) in per_degree.iter().enumerate() {
                if s.rows() != self.dims[d] || s.cols() != self.dims[d] {
                    return Err(Error::MalformedSlice(format!("s_{} in degree {d} has wrong shape", i + 1)));
                }
            }
        }
        for (k, per_degree) in self.multiplications.iter().enumerate() {
            if per_degree.len() != top {
                return Err(Error::MalformedSlice(format!("x_{} has {} degrees", k + 1, per_degree.len())));
            }
            for (d, x) in per_degree.iter().enumerate() {
                if x.rows() != self.dims[d + 1] || x.cols() != self.dims[d] {
                    return Err(Error::MalformedSlice(format!("x_{} in degree {d} has wrong shape", k + 1)));
                }
            }
        }
        Ok(())
    }

    /// Highest degree present.
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn reflection(&self, i: usize, d: usize) -> &Matrix {
        &self.reflections[i][d]
    }

    pub fn multiplication(&self, k: usize, d: usize) -> &Matrix {
        &self.multiplications[k][d]
    }

    pub fn has_multiplications(&self) -> bool {
        !self.multiplications.is_empty()
    }

    /// Polynomials in `x_1..x_r` of degree at most `top`.
    pub fn polynomials(datum: &RootDatum, top: usize) -> Self {
        let r = datum.rank;
        let bases: Vec<Vec<Monomial>> = (0..=top).map(|d| monomials_of_degree(r, d as u32)).collect();
        let dims = bases.iter().map(Vec::len).collect();
        let coords = |d: usize, p: &SparsePoly| -> Vec<Rational> {
            bases[d].iter().map(|m| p.coeff(m)).collect()
        };
        let mut reflections = Vec::new();
        for i in 0..r {
            let sub = ExtAffineElement::from_finite(FiniteWeylElement::simple_reflection(datum, i)).substitution();
            let per: Vec<Matrix> = (0..=top)
                .map(|d| {
                    let cols: Vec<Vec<Rational>> = bases[d]
                        .iter()
                        .map(|m| {
                            let p = SparsePoly::monomial(m.clone(), Rational::one()).substitute(&sub).expect("square");
                            coords(d, &p)
                        })
                        .collect();
                    Matrix::from_columns(bases[d].len(), &cols)
                })
                .collect();
            reflections.push(per);
        }
        let mut multiplications = Vec::new();
        for k in 0..r {
            let xk = SparsePoly::var(r + 1, k);
            let per: Vec<Matrix> = (0..top)
                .map(|d| {
                    let cols: Vec<Vec<Rational>> = bases[d]
                        .iter()
                        .map(|m| coords(d + 1, &(&xk * &SparsePoly::monomial(m.clone(), Rational::one()))))
                        .collect();
                    Matrix::from_columns(bases[d + 1].len(), &cols)
                })
                .collect();
            multiplications.push(per);
        }
        GradedModuleSlice { dims, reflections, multiplications }
    }

    /// The group algebra `Q W` in degree 0 with `W` acting on the left and
    /// no polynomial action.
    pub fn regular(datum: &RootDatum) -> Self {
        let group = finite_group(datum);
        let n = group.len();
        let mut reflections = Vec::new();
        for i in 0..datum.rank {
            let s = FiniteWeylElement::simple_reflection(datum, i);
            let mut m = Matrix::zeros(n, n);
            for (c, w) in group.iter().enumerate() {
                let target = s.mul(w);
                let r = group.iter().position(|v| *v == target).expect("closed under multiplication");
                m[(r, c)] = Rational::one();
            }
            reflections.push(alloc::vec![m]);
        }
        GradedModuleSlice { dims: alloc::vec![n], reflections, multiplications: Vec::new() }
    }

    /// Two copies of the polynomial slice, with `s_i (f, g) = (s_i g, s_i f)`.
    pub fn doubled_polynomials(datum: &RootDatum, top: usize) -> Self {
        let base = Self::polynomials(datum, top);
        let swap_block = |m: &Matrix| {
            let n = m.rows();
            let mut out = Matrix::zeros(2 * n, 2 * n);
            for i in 0..n {
                for j in 0..n {
                    out[(i, n + j)] = m[(i, j)].clone();
                    out[(n + i, j)] = m[(i, j)].clone();
                }
            }
            out
        };
        let diag_block = |m: &Matrix| {
            let (r, c) = (m.rows(), m.cols());
            let mut out = Matrix::zeros(2 * r, 2 * c);
            for i in 0..r {
                for j in 0..c {
                    out[(i, j)] = m[(i, j)].clone();
                    out[(r + i, c + j)] = m[(i, j)].clone();
                }
            }
            out
        };
        GradedModuleSlice {
            dims: base.dims.iter().map(|d| 2 * d).collect(),
            reflections: base.reflections.iter().map(|per| per.iter().map(swap_block).collect()).collect(),
            multiplications: base.multiplications.iter().map(|per| per.iter().map(diag_block).collect()).collect(),
        }
    }

    /// Checks the `Sym t ⋊ W` relations on the slice: involutions, finite
    /// braid relations, commuting multiplications and
    /// `s_j x_k = (x_k - a_kj x_j) s_j`.
    pub fn validate(&self, datum: &RootDatum) -> Result<()> {
        self.check_shapes()?;
        let r = datum.rank;
        if self.reflections.len() != r || (self.has_multiplications() && self.multiplications.len() != r) {
            return Err(Error::MalformedSlice(format!("expected {r} generators")));
        }
        let bad = |what: &str, d: usize| Err(Error::MalformedSlice(format!("{what} fails in degree {d}")));
        for d in 0..self.dims.len() {
            let id = Matrix::identity(self.dims[d]);
            for i in 0..r {
                let s = &self.reflections[i][d];
                if s * s != id {
                    return bad("s_i^2 = 1", d);
                }
                for j in i + 1..r {
                    let m = braid_length(datum.cartan[i][j] * datum.cartan[j][i]);
                    let t = &self.reflections[j][d];
                    let (mut a, mut b) = (id.clone(), id.clone());
                    for step in 0..m {
                        a = &a * if step % 2 == 0 { s } else { t };
                        b = &b * if step % 2 == 0 { t } else { s };
                    }
                    if a != b {
                        return bad("braid relation", d);
                    }
                }
            }
        }
        if !self.has_multiplications() {
            return Ok(());
        }
        for d in 0..self.top() {
            for k in 0..r {
                let xk = &self.multiplications[k][d];
                for j in 0..r {
                    let lhs = &self.reflections[j][d + 1] * xk;
                    let moved = &self.multiplications[k][d] - &self.multiplications[j][d].scale(&int(datum.cartan[k][j]));
                    if lhs != &moved * &self.reflections[j][d] {
                        return bad("s_j x_k = s_j(x_k) s_j", d);
                    }
                    if d + 1 < self.top() {
                        let a = &self.multiplications[k][d + 1] * &self.multiplications[j][d];
                        let b = &self.multiplications[j][d + 1] * &self.multiplications[k][d];
                        if a != b {
                            return bad("x_j x_k = x_k x_j", d);
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn braid_length(product: i64) -> usize {
    match product {
        0 => 2,
        1 => 3,
        2 => 4,
        _ => 6,
    }
}

/// One degree of the bijectivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    /// `dim M_d⁺`.
    pub plus_dim: usize,
    /// `dim M_{d+1}⁻`.
    pub minus_dim: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl DegreeReport {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleReport {
    /// 0-based index of the simple root.
    pub root: usize,
    /// `dim M_0⁻`; must vanish for `θ` to exist in degree 0.
    pub base_minus_dim: usize,
    /// Degrees `0..top` (empty when the slice has no polynomial action).
    pub examined: Vec<DegreeReport>,
    /// `θ : M_d → M_{d-1}` for `d = 0..=top` (`θ` is zero on `M_0`).
    pub theta: Option<Vec<Matrix>>,
    pub theta_squares_to_zero: Option<bool>,
    pub theta_commutation: Option<bool>,
    pub reflection_identity: Option<bool>,
}

impl ModuleReport {
    pub fn checkable(&self) -> bool {
        !self.examined.is_empty()
    }

    /// `α̌ : M_d⁺ → M_{d+1}⁻` is bijective for every examined degree.
    pub fn bijective_on_range(&self) -> bool {
        self.checkable() && self.examined.iter().all(DegreeReport::bijective)
    }

    /// Bijective on the range and nothing anti-invariant in degree 0, so
    /// `θ` can be built.
    pub fn extends(&self) -> bool {
        self.bijective_on_range() && self.base_minus_dim == 0
    }

    pub fn theta_valid(&self) -> bool {
        self.theta.is_some()
            && self.theta_squares_to_zero == Some(true)
            && self.theta_commutation == Some(true)
            && self.reflection_identity == Some(true)
    }
}

fn eigenspace(s: &Matrix, sign: i64) -> Vec<Vec<Rational>> {
    (s - &Matrix::identity(s.rows()).scale(&int(sign))).nullspace()
}

/// Examines multiplication by `α̌_j` between eigenspaces of `s_j` and, when
/// it is bijective on the whole range, builds `θ_j` and checks its
/// relations.
pub fn module_extension_check(m: &GradedModuleSlice, datum: &RootDatum, j: usize) -> Result<ModuleReport> {
    m.validate(datum)?;
    if j >= datum.rank {
        return Err(Error::InvalidIndex(j + 1));
    }
    let top = m.top();
    let base_minus_dim = eigenspace(m.reflection(j, 0), -1).len();
    let mut examined = Vec::new();
    let mut plus_bases = Vec::new();
    if m.has_multiplications() {
        for d in 0..top {
            let plus = eigenspace(m.reflection(j, d), 1);
            let minus = eigenspace(m.reflection(j, d + 1), -1);
            let x = m.multiplication(j, d);
            let image = &x.clone() * &Matrix::from_columns(m.dims()[d], &plus);
            let rank = image.rank();
            examined.push(DegreeReport {
                degree: d,
                plus_dim: plus.len(),
                minus_dim: minus.len(),
                injective: rank == plus.len(),
                surjective: rank == minus.len(),
            });
            plus_bases.push(plus);
        }
    }
    let mut report = ModuleReport {
        root: j,
        base_minus_dim,
        examined,
        theta: None,
        theta_squares_to_zero: None,
        theta_commutation: None,
        reflection_identity: None,
    };
    if !report.extends() {
        return Ok(report);
    }

    let dims = m.dims();
    let mut theta = alloc::vec![Matrix::zeros(0, dims[0])];
    for d in 1..=top {
        let plus = Matrix::from_columns(dims[d - 1], &plus_bases[d - 1]);
        let q = m.multiplication(j, d - 1) * &plus;
        let s = m.reflection(j, d);
        let mut cols = Vec::with_capacity(dims[d]);
        for e in 0..dims[d] {
            let mut y = s.column(e);
            y[e] -= Rational::one();
            let c = q.solve(&y).ok_or_else(|| Error::MalformedSlice(format!("s m - m outside the image in degree {d}")))?;
            cols.push(plus.apply(&c));
        }
        theta.push(Matrix::from_columns(dims[d - 1], &cols));
    }

    let mut square = true;
    for d in 2..=top {
        square &= (&theta[d - 1] * &theta[d]).is_zero();
    }
    let mut reflection = m.reflection(j, 0) == &Matrix::identity(dims[0]);
    for d in 1..=top {
        let lhs = &(m.multiplication(j, d - 1) * &theta[d]) + &Matrix::identity(dims[d]);
        reflection &= &lhs == m.reflection(j, d);
    }
    let mut commutation = true;
    for d in 0..top {
        for k in 0..datum.rank {
            let a = int(datum.cartan[k][j]);
            let moved = &m.multiplications[k][d] - &m.multiplications[j][d].scale(&a);
            let first = &theta[d + 1] * &moved;
            let second = if d == 0 { Matrix::zeros(dims[0], dims[0]) } else { m.multiplication(k, d - 1) * &theta[d] };
            commutation &= &first - &second == Matrix::identity(dims[d]).scale(&a);
        }
    }
    report.theta = Some(theta);
    report.theta_squares_to_zero = Some(square);
    report.theta_commutation = Some(commutation);
    report.reflection_identity = Some(reflection);
    Ok(report)
}

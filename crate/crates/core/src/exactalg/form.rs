use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use super::{LinearSubstitution, SparsePoly};
use crate::error::{Error, Result};
use crate::rootdata::Coroot;

/// The linear function `<x, v> + k h` on `t*_aff`, stored as integer
/// coefficients over `x_1..x_r, h`.
///
/// Inside fractions forms are kept primitive with their first nonzero
/// coefficient positive; [`AffineForm::normalize`] returns the scalar that
/// was split off.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    coeffs: Vec<i64>,
}

impl fmt::Debug for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_poly())
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl AffineForm {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::ZeroForm);
        }
        Ok(AffineForm { coeffs })
    }

    pub fn from_coroot(v: &Coroot, hbar_coeff: i64) -> Result<Self> {
        let mut coeffs = v.0.clone();
        coeffs.push(hbar_coeff);
        Self::new(coeffs)
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coroot(&self) -> Coroot {
        Coroot(self.coeffs[..self.coeffs.len() - 1].to_vec())
    }

    pub fn hbar_coeff(&self) -> i64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly::linear(&self.coeffs)
    }

    /// `(scalar, primitive)` with `self = scalar * primitive`.
    pub fn normalize(&self) -> (i64, AffineForm) {
        let g = self.coeffs.iter().fold(0i64, |g, &c| g.gcd(&c));
        let lead = *self.coeffs.iter().find(|&&c| c != 0).expect("nonzero form");
        let scalar = if lead < 0 { -g } else { g };
        let coeffs = self.coeffs.iter().map(|c| c / scalar).collect();
        (scalar, AffineForm { coeffs })
    }

    pub fn is_normalized(&self) -> bool {
        self.normalize().0 == 1
    }

    pub fn substitute(&self, sub: &LinearSubstitution) -> AffineForm {
        AffineForm { coeffs: sub.apply_row(&self.coeffs) }
    }

    /// The form restricted to `h = 0`; `None` if it vanishes there.
    pub fn at_hbar_zero(&self) -> Option<AffineForm> {
        let n = self.coeffs.len();
        let mut coeffs = self.coeffs.clone();
        coeffs[n - 1] = 0;
        AffineForm::new(coeffs).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn normalization() {
        let f = AffineForm::new(vec![-2, 4, -6]).unwrap();
        let (s, g) = f.normalize();
        assert_eq!(s, -2);
        assert_eq!(g.coeffs(), &[1, -2, 3]);
        assert!(g.is_normalized());
        let f = AffineForm::new(vec![0, 0, -1]).unwrap();
        assert_eq!(f.normalize(), (-1, AffineForm::new(vec![0, 0, 1]).unwrap()));
        assert_eq!(AffineForm::new(vec![0, 0]), Err(Error::ZeroForm));
    }
}

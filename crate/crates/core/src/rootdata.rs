//! Finite root data of types A–G.
//!
//! Points of `t*` (and weights) are written in the fundamental-weight basis,
//! `x_i = <x, α̌_i>`. Coroots are written in the simple-coroot basis, so the
//! pairing is a plain dot product. The Cartan matrix follows
//! `a_ij = <α_j, α̌_i>` with Bourbaki numbering of the nodes; for `G2` node 1
//! is the short root.

use alloc::collections::BTreeMap;
use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

const MAX_RANK: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn parse(label: &str) -> Result<Self> {
        let err = || Error::UnknownCartanType(label.to_string());
        let label = label.trim();
        let mut chars = label.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(err()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let rank: usize = rest.parse().map_err(|_| err())?;
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok || rank > MAX_RANK {
            return Err(err());
        }
        Ok(CartanType { family, rank })
    }

    pub fn label(&self) -> String {
        format!("{:?}{}", self.family, self.rank)
    }

    /// Squared root lengths of the simple roots (up to a common scale) and
    /// the edges of the Dynkin diagram.
    fn diagram(&self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let r = self.rank;
        let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![2; r], chain(r)),
            Family::B => {
                let mut len = vec![2; r];
                len[r - 1] = 1;
                (len, chain(r))
            }
            Family::C => {
                let mut len = vec![1; r];
                len[r - 1] = 2;
                (len, chain(r))
            }
            Family::D => {
                let mut edges = chain(r - 1);
                edges.push((r - 3, r - 1));
                (vec![2; r], edges)
            }
            Family::E => {
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..r - 1).map(|i| (i, i + 1)));
                (vec![2; r], edges)
            }
            Family::F => (vec![2, 2, 1, 1], chain(4)),
            Family::G => (vec![1, 3], vec![(0, 1)]),
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let (len, edges) = self.diagram();
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j) in &edges {
            let (li, lj) = (len[i], len[j]);
            a[i][j] = if li >= lj { -1 } else { -(lj / li) };
            a[j][i] = if lj >= li { -1 } else { -(li / lj) };
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// An element of the weight lattice, `coords[i] = <μ, α̌_i>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// An element of the coroot lattice in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coroot(pub Vec<i64>);

impl Coroot {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Coroot(c)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    /// Coefficients in the simple-root basis.
    pub coeffs: Vec<i64>,
    pub weight: Weight,
    pub coroot: Coroot,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// `β = w(α_simple)` with `w = s_{word[0]} ... s_{word[k-1]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugator {
    pub simple: usize,
    pub word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// All roots, positive ones first, each block ordered by height.
    pub roots: Vec<Root>,
    pub positive_roots: Vec<Root>,
    pub highest_root: Root,
    /// The root `θ` whose coroot is the highest coroot. The affine simple
    /// reflection is the reflection in `<x, θ̌> = h`. Equal to the highest
    /// root in simply-laced types and the highest short root otherwise.
    pub affine_root: Root,
    conjugators: Vec<Conjugator>,
    index: BTreeMap<Weight, usize>,
}

impl RootDatum {
    pub fn build(label: &str) -> Result<Self> {
        Ok(Self::from_type(CartanType::parse(label)?))
    }

    pub fn from_type(cartan_type: CartanType) -> Self {
        let rank = cartan_type.rank;
        let cartan = cartan_type.cartan_matrix();

        // Close the simple roots under simple reflections; the coroot is
        // carried along so that w(α)^∨ = w(α̌).
        let mut found: BTreeMap<Weight, (Root, Conjugator)> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let mut coeffs = vec![0; rank];
            coeffs[i] = 1;
            let root = Root {
                weight: weight_of(&cartan, &coeffs),
                coeffs,
                coroot: Coroot::simple(rank, i),
            };
            let conj = Conjugator { simple: i, word: Vec::new() };
            if found.insert(root.weight.clone(), (root.clone(), conj.clone())).is_none() {
                queue.push_back((root, conj));
            }
        }
        while let Some((root, conj)) = queue.pop_front() {
            for j in 0..rank {
                let next = reflect_root(&cartan, &root, j);
                if !found.contains_key(&next.weight) {
                    let mut word = vec![j];
                    word.extend_from_slice(&conj.word);
                    let c = Conjugator { simple: conj.simple, word };
                    found.insert(next.weight.clone(), (next.clone(), c.clone()));
                    queue.push_back((next, c));
                }
            }
        }

        let mut all: Vec<(Root, Conjugator)> = found.into_values().collect();
        all.sort_by(|(a, _), (b, _)| {
            let key = |r: &Root| (!r.is_positive(), r.height().abs(), r.coeffs.clone());
            key(a).cmp(&key(b))
        });
        let (roots, conjugators): (Vec<_>, Vec<_>) = all.into_iter().unzip();
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.weight.clone(), k))
            .collect();
        let positive_roots: Vec<Root> = roots.iter().filter(|r| r.is_positive()).cloned().collect();

        let highest_root = positive_roots
            .iter()
            .max_by_key(|r| r.height())
            .cloned()
            .expect("root system is nonempty");
        let affine_root = positive_roots
            .iter()
            .max_by_key(|r| r.coroot.0.iter().sum::<i64>())
            .cloned()
            .expect("root system is nonempty");

        RootDatum {
            cartan_type,
            rank,
            cartan,
            roots,
            positive_roots,
            highest_root,
            affine_root,
            conjugators,
            index,
        }
    }

    pub fn label(&self) -> String {
        self.cartan_type.label()
    }

    /// Weight coordinates of the simple root `α_j` (column `j` of the Cartan
    /// matrix).
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight((0..self.rank).map(|i| self.cartan[i][j]).collect())
    }

    pub fn simple_coroot(&self, i: usize) -> Coroot {
        Coroot::simple(self.rank, i)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank, i)
    }

    pub fn root_index(&self, weight: &Weight) -> Option<usize> {
        self.index.get(weight).copied()
    }

    pub fn is_root(&self, weight: &Weight) -> bool {
        self.index.contains_key(weight)
    }

    pub fn root(&self, weight: &Weight) -> Result<&Root> {
        self.root_index(weight).map(|k| &self.roots[k]).ok_or(Error::NotARoot)
    }

    /// A simple root and a word `w` with `β = w(α_i)`.
    pub fn conjugator(&self, weight: &Weight) -> Result<&Conjugator> {
        self.root_index(weight)
            .map(|k| &self.conjugators[k])
            .ok_or(Error::NotARoot)
    }

    /// `<μ, v>` for a weight and a coroot.
    pub fn pairing(&self, mu: &Weight, v: &Coroot) -> Result<i64> {
        pairing(mu, v).and_then(|p| {
            if mu.rank() != self.rank {
                Err(Error::DimensionMismatch { expected: self.rank, found: mu.rank() })
            } else {
                Ok(p)
            }
        })
    }

    /// Coroot `v` transformed by the finite reflection `s_i`:
    /// `s_i(v) = v - <α_i, v> α̌_i`.
    pub fn reflect_coroot(&self, v: &Coroot, i: usize) -> Coroot {
        let p: i64 = (0..self.rank).map(|j| v.0[j] * self.cartan[j][i]).sum();
        let mut out = v.clone();
        out.0[i] -= p;
        out
    }

    /// `s_i(μ) = μ - <μ, α̌_i> α_i`.
    pub fn reflect_weight(&self, mu: &Weight, i: usize) -> Weight {
        let p = mu.0[i];
        Weight((0..self.rank).map(|k| mu.0[k] - p * self.cartan[k][i]).collect())
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }
}

fn weight_of(cartan: &[Vec<i64>], coeffs: &[i64]) -> Weight {
    let r = coeffs.len();
    Weight((0..r).map(|i| (0..r).map(|j| cartan[i][j] * coeffs[j]).sum()).collect())
}

fn reflect_root(cartan: &[Vec<i64>], root: &Root, j: usize) -> Root {
    let r = root.coeffs.len();
    let p = root.weight.0[j];
    let mut coeffs = root.coeffs.clone();
    coeffs[j] -= p;
    let q: i64 = (0..r).map(|k| root.coroot.0[k] * cartan[k][j]).sum();
    let mut coroot = root.coroot.clone();
    coroot.0[j] -= q;
    Root { weight: weight_of(cartan, &coeffs), coeffs, coroot }
}

pub fn pairing(mu: &Weight, v: &Coroot) -> Result<i64> {
    if mu.rank() != v.rank() {
        return Err(Error::DimensionMismatch { expected: mu.rank(), found: v.rank() });
    }
    Ok(mu.0.iter().zip(&v.0).map(|(a, b)| a * b).sum())
}

/// Returns `(g, a, b)` with `a*x + b*y = g = gcd(x, y) >= 0`.
fn ext_gcd(x: i64, y: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (x, y);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// A weight `μ` with `<μ, v> = 1`.
///
/// The solution is obtained by folding an extended gcd over the coordinates
/// of `v` from left to right; a coordinate already divisible by the running
/// gcd contributes zero. This makes the result deterministic, e.g. `ϖ_1`
/// for `v = α̌_1 + α̌_2`.
pub fn find_weight_pairing_one(v: &Coroot) -> Result<Weight> {
    let r = v.rank();
    let mut u = vec![0i64; r];
    let mut g = 0i64;
    for (k, &c) in v.0.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if g == 0 {
            g = c.abs();
            u[k] = c.signum();
            continue;
        }
        if c % g == 0 {
            continue;
        }
        let (ng, a, b) = ext_gcd(g, c);
        for x in u.iter_mut().take(k) {
            *x *= a;
        }
        u[k] = b;
        g = ng;
    }
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    Ok(Weight(u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn datum(label: &str) -> RootDatum {
        RootDatum::build(label).unwrap()
    }

    #[test]
    fn root_counts() {
        let expected = [
            ("A1", 2),
            ("A2", 6),
            ("A3", 12),
            ("B2", 8),
            ("B3", 18),
            ("C3", 18),
            ("D4", 24),
            ("D5", 40),
            ("E6", 72),
            ("E7", 126),
            ("E8", 240),
            ("F4", 48),
            ("G2", 12),
        ];
        for (label, n) in expected {
            assert_eq!(datum(label).num_roots(), n, "{label}");
        }
    }

    #[test]
    fn cartan_invariants() {
        for label in ["A4", "B3", "C4", "D4", "E6", "F4", "G2"] {
            let d = datum(label);
            for i in 0..d.rank {
                assert_eq!(d.cartan[i][i], 2);
                for j in 0..d.rank {
                    if i != j {
                        assert!(d.cartan[i][j] <= 0);
                        assert_eq!(d.cartan[i][j] == 0, d.cartan[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(datum("A1").highest_root.coeffs, vec![1]);
        assert_eq!(datum("A2").highest_root.coeffs, vec![1, 1]);
        assert_eq!(datum("G2").highest_root.coeffs, vec![3, 2]);
        assert_eq!(datum("B2").highest_root.coeffs, vec![1, 2]);
        assert_eq!(datum("C2").highest_root.coeffs, vec![2, 1]);
        assert_eq!(datum("E8").highest_root.coeffs, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        for label in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
            let d = datum(label);
            let h = &d.highest_root;
            for i in 0..d.rank {
                let sum = &h.weight + &d.simple_root(i);
                assert!(!d.is_root(&sum), "{label}: δ + α_{i} is a root");
            }
        }
    }

    #[test]
    fn affine_root_is_highest_short() {
        assert_eq!(datum("A2").affine_root, datum("A2").highest_root);
        assert_eq!(datum("B2").affine_root.coeffs, vec![1, 1]);
        assert_eq!(datum("C2").affine_root.coeffs, vec![1, 1]);
        assert_eq!(datum("G2").affine_root.coeffs, vec![2, 1]);
        assert_eq!(datum("F4").affine_root.coeffs, vec![1, 2, 3, 2]);
    }

    #[test]
    fn pairing_examples() {
        let d = datum("A2");
        for i in 0..2 {
            assert_eq!(d.pairing(&d.simple_root(i), &d.simple_coroot(i)).unwrap(), 2);
        }
        assert_eq!(d.pairing(&d.simple_root(0), &d.simple_coroot(1)).unwrap(), -1);
        let a1 = datum("A1");
        assert_eq!(a1.pairing(&a1.fundamental_weight(0), &a1.simple_coroot(0)).unwrap(), 1);
        assert!(pairing(&Weight(vec![1, 0]), &Coroot(vec![1])).is_err());
    }

    #[test]
    fn cartan_entry_is_pairing() {
        for label in ["B3", "G2", "F4"] {
            let d = datum(label);
            for i in 0..d.rank {
                for j in 0..d.rank {
                    let p = d.pairing(&d.simple_root(j), &d.simple_coroot(i)).unwrap();
                    assert_eq!(p, d.cartan[i][j]);
                }
            }
        }
    }

    #[test]
    fn roots_are_conjugate_to_simple_roots() {
        for label in ["A3", "B3", "C3", "D4", "F4", "G2"] {
            let d = datum(label);
            for root in &d.roots {
                let c = d.conjugator(&root.weight).unwrap();
                let mut w = d.simple_root(c.simple);
                let mut v = d.simple_coroot(c.simple);
                for &j in c.word.iter().rev() {
                    w = d.reflect_weight(&w, j);
                    v = d.reflect_coroot(&v, j);
                }
                assert_eq!(w, root.weight);
                assert_eq!(v, root.coroot);
            }
        }
    }

    #[test]
    fn coroot_pairing_is_two() {
        for label in ["B2", "G2", "F4", "C3"] {
            let d = datum(label);
            for root in &d.roots {
                assert_eq!(d.pairing(&root.weight, &root.coroot).unwrap(), 2);
            }
        }
    }

    #[test]
    fn weight_pairing_one() {
        let a1 = datum("A1");
        assert_eq!(find_weight_pairing_one(&a1.simple_coroot(0)).unwrap(), Weight(vec![1]));
        let a2 = datum("A2");
        assert_eq!(a2.highest_root.coroot, Coroot(vec![1, 1]));
        assert_eq!(
            find_weight_pairing_one(&a2.highest_root.coroot).unwrap(),
            Weight(vec![1, 0])
        );
        for label in ["G2", "B2", "C2", "F4", "E8", "D5"] {
            let d = datum(label);
            for r in [&d.highest_root, &d.affine_root] {
                let mu = find_weight_pairing_one(&r.coroot).unwrap();
                assert_eq!(d.pairing(&mu, &r.coroot).unwrap(), 1, "{label}");
            }
        }
        assert_eq!(find_weight_pairing_one(&Coroot(vec![2, 4])), Err(Error::GcdNotOne(2)));
        assert_eq!(
            find_weight_pairing_one(&Coroot(vec![4, 6, 9])).map(|mu| pairing(&mu, &Coroot(vec![4, 6, 9])).unwrap()),
            Ok(1)
        );
    }

    #[test]
    fn rejects_bad_labels() {
        for label in ["", "X2", "B1", "D3", "E5", "E9", "F3", "G3", "A", "A-1", "A2x"] {
            assert!(matches!(RootDatum::build(label), Err(Error::UnknownCartanType(_))), "{label}");
        }
        assert_eq!(RootDatum::build("a_2").unwrap().label(), "A2");
    }
}

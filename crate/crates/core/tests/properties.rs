use nilhecke_core::exactalg::{rat, reduce, AffineForm};
use nilhecke_core::nilhecke::straighten::straighten_mul;
use nilhecke_core::skew::{e_mu, theta_simple};
use nilhecke_core::weyl::affine_ball;
use nilhecke_core::{
    AffineSimpleIndex, ExtAffineElement, Monomial, NilHecke, NilHeckeElement, Rational, RootDatum, RootFraction,
    SkewElement, SparsePoly,
};
use proptest::prelude::*;
use proptest::sample::select;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TYPES: &[&str] = &["A1", "A2", "B2"];

#[derive(Debug, Clone)]
enum Gen {
    Theta(usize),
    Character(usize, bool),
    Poly(Vec<(Vec<u16>, i64)>),
}

fn gen(rank: usize) -> impl Strategy<Value = Gen> {
    let term = (prop::collection::vec(0u16..=1, rank + 1), -3i64..=3);
    prop_oneof![
        3 => (0..=rank).prop_map(Gen::Theta),
        2 => (0..rank, any::<bool>()).prop_map(|(j, neg)| Gen::Character(j, neg)),
        2 => prop::collection::vec(term, 1..=2).prop_map(Gen::Poly),
    ]
}

fn poly(rank: usize, terms: &[(Vec<u16>, i64)]) -> SparsePoly {
    let mut f = SparsePoly::zero(rank + 1);
    for (e, c) in terms {
        f.add_term(Monomial(e.clone()), rat(*c));
    }
    f
}

fn element(d: &RootDatum, word: &[Gen]) -> SkewElement {
    let mut out = SkewElement::one(d.rank + 1);
    for g in word {
        let x = match g {
            Gen::Theta(i) => theta_simple(d, AffineSimpleIndex(*i)).unwrap(),
            Gen::Character(j, neg) => e_mu(&d.fundamental_weight(*j).scale(if *neg { -1 } else { 1 })),
            Gen::Poly(t) => SkewElement::poly(poly(d.rank, t)),
        };
        out = &out * &x;
    }
    out
}

/// A type label with three generator words for it.
fn triple() -> impl Strategy<Value = (&'static str, Vec<Gen>, Vec<Gen>, Vec<Gen>)> {
    select(TYPES).prop_flat_map(|t| {
        let rank = RootDatum::build(t).unwrap().rank;
        let w = move || prop::collection::vec(gen(rank), 0..=3);
        (Just(t), w(), w(), w())
    })
}

/// Terms `(index into a ball of group elements, polynomial terms)`.
type Spec = Vec<(usize, Vec<(Vec<u16>, i64)>)>;

fn nilhecke_element(rank: usize) -> impl Strategy<Value = Spec> {
    let term = (prop::collection::vec(0u16..=2, rank + 1), -4i64..=4);
    prop::collection::vec((0usize..64, prop::collection::vec(term, 1..=2)), 1..=3)
}

fn build_nilhecke(d: &RootDatum, ball: &[ExtAffineElement], spec: &Spec) -> NilHeckeElement {
    let mut u = NilHeckeElement::zero(d.rank + 1);
    for (k, terms) in spec {
        u.add_term(ball[k % ball.len()].clone(), poly(d.rank, terms));
    }
    u
}

fn pair() -> impl Strategy<Value = (&'static str, Spec, Spec)> {
    select(TYPES).prop_flat_map(|t| {
        let rank = RootDatum::build(t).unwrap().rank;
        (Just(t), nilhecke_element(rank), nilhecke_element(rank))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn skew_ring_axioms((t, a, b, c) in triple()) {
        let d = RootDatum::build(t).unwrap();
        let (a, b, c) = (element(&d, &a), element(&d, &b), element(&d, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &SkewElement::one(d.rank + 1), a.clone());
    }

    #[test]
    fn action_is_multiplicative((t, a, b, f) in triple()) {
        let d = RootDatum::build(t).unwrap();
        let (a, b) = (element(&d, &a), element(&d, &b));
        let g = match f.first() {
            Some(Gen::Poly(terms)) => poly(d.rank, terms),
            _ => SparsePoly::var(d.rank + 1, 0).pow(2),
        };
        let lhs = (&a * &b).act(&g).unwrap();
        let rhs = a.act_fraction(&b.act(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn generator_products_are_members((t, a, b, _) in triple()) {
        let nh = NilHecke::build(t).unwrap();
        let u = &element(nh.datum(), &a) * &element(nh.datum(), &b);
        let v = nh.membership(&u).expect("products of generators are members");
        prop_assert_eq!(nh.expand(&v), u);
    }

    #[test]
    fn membership_inverts_expansion((t, a, _) in pair()) {
        let nh = NilHecke::build(t).unwrap();
        let ball = affine_ball(nh.datum(), 3);
        let u = build_nilhecke(nh.datum(), &ball, &a);
        prop_assert_eq!(nh.membership(&nh.expand(&u)).unwrap(), u);
    }

    #[test]
    fn straightening_agrees_with_skew_product((t, a, b) in pair()) {
        let nh = NilHecke::build(t).unwrap();
        let ball = affine_ball(nh.datum(), 2);
        let (a, b) = (build_nilhecke(nh.datum(), &ball, &a), build_nilhecke(nh.datum(), &ball, &b));
        prop_assert_eq!(straighten_mul(nh.datum(), &a, &b).unwrap(), nh.mul(&a, &b).unwrap());
    }

    #[test]
    fn specializing_h_to_zero_is_multiplicative((t, a, b) in pair()) {
        let nh = NilHecke::build(t).unwrap();
        let ball = affine_ball(nh.datum(), 2);
        let (a, b) = (build_nilhecke(nh.datum(), &ball, &a), build_nilhecke(nh.datum(), &ball, &b));
        let zero = Rational::from_integer(0.into());
        let expected = nh.mul(&a, &b).unwrap().specialize(&zero);
        let prod = nh.expand_at_zero(&a).mul_hbar_zero(&nh.expand_at_zero(&b)).unwrap();
        prop_assert_eq!(nh.membership_at_zero(&prod).unwrap(), expected);
    }

    #[test]
    fn reduce_is_idempotent(
        num in prop::collection::vec((prop::collection::vec(0u16..=2, 3), -3i64..=3), 1..=3),
        den in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..=3),
    ) {
        let forms: Vec<AffineForm> = den.into_iter().filter_map(|c| AffineForm::new(c).ok()).collect();
        let f = RootFraction::new(poly(2, &num), forms).unwrap();
        let once = reduce(&f);
        prop_assert_eq!(reduce(&once), once.clone());
        prop_assert_eq!(once, f);
    }
}

fn homogeneous(rng: &mut ChaCha8Rng, nh: &NilHecke, ball: &[ExtAffineElement]) -> NilHeckeElement {
    let nvars = nh.nvars();
    let w = ball[rng.gen_range(0..ball.len())].clone();
    let deg = rng.gen_range(0..=3);
    let mut f = SparsePoly::zero(nvars);
    for _ in 0..rng.gen_range(1..=3) {
        let mut e = vec![0u16; nvars];
        for _ in 0..deg {
            e[rng.gen_range(0..nvars)] += 1;
        }
        f.add_term(Monomial(e), rat(rng.gen_range(1..=5)));
    }
    NilHeckeElement::term(w, f)
}

#[test]
fn products_of_homogeneous_elements_are_homogeneous() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    for t in ["A1", "A2"] {
        let nh = NilHecke::build(t).unwrap();
        let ball = affine_ball(nh.datum(), 3);
        for _ in 0..100 {
            let a = homogeneous(&mut rng, &nh, &ball);
            let b = homogeneous(&mut rng, &nh, &ball);
            let (da, db) = (nh.degree(&a).unwrap(), nh.degree(&b).unwrap());
            let p = nh.mul(&a, &b).unwrap();
            if !p.is_zero() {
                assert_eq!(nh.degree(&p), Some(da + db), "{a:?} · {b:?}");
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 200);
}

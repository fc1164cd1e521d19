use alloc::vec;
use alloc::vec::Vec;

use super::module::{module_extension_check, GradedModuleSlice};
use super::phi::{demazure_image, group_image, highest_root_image, image_commutation, image_squares_to_zero};
use super::straighten::straighten_mul;
use super::verify::{check_braid, check_defrel, verify_affine_conjugation, Probe};
use super::*;
use crate::exactalg::{rat, ratio, AffineForm};
use crate::skew::{check_ddh, group_embed};
use crate::weyl::{all_reduced_words, simple_reflection, word_product, FiniteWeylElement};

fn nh(label: &str) -> NilHecke {
    NilHecke::build(label).unwrap()
}

fn s(nh: &NilHecke, i: usize) -> ExtAffineElement {
    simple_reflection(nh.datum(), AffineSimpleIndex(i))
}

fn x(nh: &NilHecke, k: usize) -> SparsePoly {
    SparsePoly::var(nh.nvars(), k)
}

fn id(nh: &NilHecke) -> ExtAffineElement {
    ExtAffineElement::identity(nh.rank())
}

fn idx(word: &[usize]) -> Vec<AffineSimpleIndex> {
    word.iter().map(|&i| AffineSimpleIndex(i)).collect()
}

#[test]
fn membership_of_theta_is_basis_vector() {
    let a1 = nh("A1");
    let t = theta_simple(a1.datum(), AffineSimpleIndex(1)).unwrap();
    assert_eq!(a1.membership(&t).unwrap(), a1.theta_basis(s(&a1, 1)));
}

#[test]
fn membership_of_reflection() {
    let a1 = nh("A1");
    let u = a1.membership(&group_embed(&s(&a1, 1))).unwrap();
    let expected = NilHeckeElement::from_terms(2, [(s(&a1, 1), x(&a1, 0)), (id(&a1), SparsePoly::one(2))]);
    assert_eq!(u, expected);
}

#[test]
fn membership_rejects_inverse_root() {
    let a1 = nh("A1");
    let inv = RootFraction::inverse_form(&AffineForm::new(vec![1, 0]).unwrap());
    let err = a1.membership(&SkewElement::scalar(inv.clone())).unwrap_err();
    assert_eq!(err.index, id(&a1));
    assert_eq!(err.coeff, inv);
}

#[test]
fn products_from_examples() {
    let a1 = nh("A1");
    let t1 = a1.theta_basis(s(&a1, 1));
    assert!(a1.mul(&t1, &t1).unwrap().is_zero());
    let prod = a1.mul(&t1, &NilHeckeElement::poly(x(&a1, 0))).unwrap();
    let expected = NilHeckeElement::from_terms(2, [(s(&a1, 1), -&x(&a1, 0)), (id(&a1), SparsePoly::integer(2, -2))]);
    assert_eq!(prod, expected);

    let a2 = nh("A2");
    let p = a2.mul(&a2.theta_basis(s(&a2, 1)), &a2.theta_basis(s(&a2, 2))).unwrap();
    assert_eq!(p, a2.theta_basis(s(&a2, 1).mul(&s(&a2, 2))));
}

#[test]
fn straightening_agrees_with_skew_products() {
    for label in ["A1", "A2", "B2"] {
        let h = nh(label);
        let d = h.datum();
        let words: [&[usize]; 4] = [&[0], &[1, 0], &[0, 1, 2], &[2, 0]];
        let mut elems = Vec::new();
        for w in words {
            let w: Vec<_> = idx(w).into_iter().filter(|i| i.0 <= d.rank).collect();
            let g = word_product(d, &w);
            let f = &(&x(&h, 0) * &x(&h, d.rank - 1)) + &SparsePoly::hbar(h.nvars());
            elems.push(NilHeckeElement::term(g, f));
        }
        let omega = ExtAffineElement::translation(d.fundamental_weight(0));
        elems.push(h.group_element(&omega));
        for a in &elems {
            for b in &elems {
                assert_eq!(h.mul(a, b).unwrap(), straighten_mul(d, a, b).unwrap(), "{label}");
            }
        }
    }
}

#[test]
fn word_invariance_examples() {
    let a2 = nh("A2");
    let w0 = word_product(a2.datum(), &idx(&[1, 2, 1]));
    assert!(a2.theta_word_invariance(&w0, &idx(&[1, 2, 1]), &idx(&[2, 1, 2])).unwrap());
    assert!(a2.theta_word_invariance(&s(&a2, 1), &idx(&[1]), &idx(&[1])).unwrap());
    assert_eq!(a2.theta_word_invariance(&w0, &idx(&[1, 2, 1]), &idx(&[1, 2])), Err(Error::NotReduced));
    assert_eq!(a2.theta_word(&idx(&[1, 1])), Err(Error::NotReduced));

    let a1 = nh("A1");
    let t_alpha = ExtAffineElement::translation(a1.datum().simple_root(0));
    let words = all_reduced_words(a1.datum(), &t_alpha);
    assert_eq!(words, vec![idx(&[0, 1])]);
    assert!(a1.theta_word_invariance(&t_alpha, &words[0], &words[0]).unwrap());
}

#[test]
fn grading_examples() {
    let a1 = nh("A1");
    let t1 = a1.theta_basis(s(&a1, 1));
    assert_eq!(a1.grade(&t1), [(-1, t1.clone())].into_iter().collect());
    let xe = NilHeckeElement::poly(x(&a1, 0));
    assert_eq!(a1.grade(&xe), [(1, xe.clone())].into_iter().collect());
    let xt = NilHeckeElement::term(s(&a1, 1), x(&a1, 0));
    assert_eq!(a1.degree(&xt), Some(0));
    let mixed = &xt + &t1;
    assert_eq!(a1.degree(&mixed), None);
    assert_eq!(a1.grade(&mixed).len(), 2);
}

#[test]
fn specialization_examples() {
    let a1 = nh("A1");
    let hb = NilHeckeElement::poly(SparsePoly::hbar(2));
    assert!(hb.specialize(&rat(0)).is_zero());
    let u = NilHeckeElement::term(s(&a1, 1), &x(&a1, 0) + &SparsePoly::hbar(2));
    let expected = NilHeckeElement::term(s(&a1, 1), &x(&a1, 0) + &SparsePoly::one(2));
    assert_eq!(u.specialize(&rat(1)), expected);
    let d = a1.datum();
    assert!(verify::ddh_at_zero(d, &d.fundamental_weight(0), 0).unwrap());
    assert!(check_ddh(d, &d.fundamental_weight(0), &d.simple_coroot(0)).unwrap());
}

#[test]
fn symmetrizer_a1() {
    let a1 = nh("A1");
    let e = a1.symmetrizer();
    let expected = NilHeckeElement::from_terms(
        2,
        [(id(&a1), SparsePoly::one(2)), (s(&a1, 1), x(&a1, 0).scale(&ratio(1, 2)))],
    );
    assert_eq!(e, expected);
    assert_eq!(a1.mul(&e, &e).unwrap(), e);
    let f = NilHeckeElement::poly(x(&a1, 0).pow(2));
    assert_eq!(a1.mul(&f, &e).unwrap(), a1.mul(&e, &f).unwrap());
}

#[test]
fn spherical_projection_examples() {
    let a1 = nh("A1");
    let e = a1.symmetrizer();
    assert_eq!(a1.spherical_project(&e).unwrap(), e);
    // θ e = (1/x)(s - 1)(1 + s)/2 = 0.
    assert!(a1.spherical_project(&a1.theta_basis(s(&a1, 1))).unwrap().is_zero());
    let f = NilHeckeElement::poly(x(&a1, 0).pow(2));
    assert_eq!(a1.spherical_project(&f).unwrap(), a1.mul(&f, &e).unwrap());
}

#[test]
fn highest_root_conjugation_is_off_by_sign_in_simply_laced_types() {
    for label in ["A1", "A2", "A3"] {
        let d = RootDatum::build(label).unwrap();
        let check = verify_th0(&d).unwrap();
        assert_eq!(d.pairing(&check.mu, &d.highest_root.coroot).unwrap(), 1);
        assert!(!check.holds(), "{label}");
        assert_eq!(check.lhs, -&check.rhs, "{label}");
    }
}

#[test]
fn affine_root_conjugation_gives_affine_generator() {
    for label in ["A1", "A2", "B2", "C2", "G2", "A3"] {
        let d = RootDatum::build(label).unwrap();
        assert!(verify_affine_conjugation(&d).unwrap().holds(), "{label}");
    }
}

#[test]
fn braid_and_defining_relations() {
    for label in ["A1", "A2", "G2"] {
        let d = RootDatum::build(label).unwrap();
        assert!(check_braid(&d).unwrap().iter().all(|c| c.holds), "{label}");
        for i in AffineSimpleIndex::all(&d) {
            for k in 0..d.rank {
                assert!(check_defrel(&d, i, Probe::Coroot(k)).unwrap(), "{label} {i} {k}");
            }
            assert!(check_defrel(&d, i, Probe::Hbar).unwrap());
        }
    }
    let a1 = RootDatum::build("A1").unwrap();
    let orders: Vec<_> = check_braid(&a1).unwrap().iter().map(|c| c.order).collect();
    // θ_0² and θ_1²; s_0 s_1 has infinite order.
    assert_eq!(orders, vec![0, 0]);
}

#[test]
fn phi_images_a1() {
    let d = RootDatum::build("A1").unwrap();
    let alpha = d.simple_root(0);
    assert_eq!(phi_image(&d, AffineSimpleIndex(1)).unwrap(), demazure_image(&d, &alpha).unwrap());
    assert_eq!(highest_root_image(&d).unwrap(), demazure_image(&d, &alpha).unwrap());
    for i in AffineSimpleIndex::all(&d) {
        assert!(image_squares_to_zero(&d, i).unwrap());
        assert!(image_commutation(&d, i, 0).unwrap());
    }
}

#[test]
fn phi_affine_image_respects_length_zero_conjugation() {
    // ω = t_ϖ s_1 has length 0 and ω θ_1 ω⁻¹ = θ_0.
    let d = RootDatum::build("A1").unwrap();
    let n = d.rank + 1;
    let omega = ExtAffineElement::translation(d.fundamental_weight(0))
        .mul(&ExtAffineElement::from_finite(FiniteWeylElement::simple_reflection(&d, 0)));
    assert_eq!(omega.length(&d), 0);
    let t1 = theta_simple(&d, AffineSimpleIndex(1)).unwrap();
    let t0 = theta_simple(&d, AffineSimpleIndex(0)).unwrap();
    assert_eq!(crate::skew::conjugate(&omega, &t1), t0);

    let w = group_image(n, &omega);
    let w_inv = group_image(n, &omega.inverse());
    let conj = &(&w * &phi_image(&d, AffineSimpleIndex(1)).unwrap()) * &w_inv;
    assert_eq!(conj, phi_image(&d, AffineSimpleIndex(0)).unwrap());
    assert_ne!(conj, highest_root_image(&d).unwrap());
    assert_ne!(conj, (-&highest_root_image(&d).unwrap()));
}

#[test]
fn reduction_at_zero_is_multiplicative() {
    let a2 = nh("A2");
    let d = a2.datum();
    let elems: Vec<SkewElement> = vec![
        theta_simple(d, AffineSimpleIndex(0)).unwrap(),
        theta_simple(d, AffineSimpleIndex(2)).unwrap(),
        crate::skew::e_mu(&d.fundamental_weight(1)),
        SkewElement::poly(x(&a2, 0)),
    ];
    for a in &elems {
        for b in &elems {
            let lhs = reduce_at_hbar_zero(&a.mul_hbar_zero(b).unwrap()).unwrap();
            let rhs = &reduce_at_hbar_zero(a).unwrap() * &reduce_at_hbar_zero(b).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn phi2_examples() {
    let a1 = RootDatum::build("A1").unwrap();
    assert!(verify_phi2(&a1, &a1.fundamental_weight(0), 0).unwrap());
    assert!(verify_phi2(&a1, &crate::rootdata::Weight::zero(1), 0).unwrap());
    let a2 = RootDatum::build("A2").unwrap();
    assert_eq!(a2.pairing(&a2.fundamental_weight(0), &a2.simple_coroot(1)).unwrap(), 0);
    assert!(verify_phi2(&a2, &a2.fundamental_weight(0), 1).unwrap());
    assert!(verify_phi2(&a2, &-&a2.fundamental_weight(1), 1).unwrap());
    assert!(verify_phi2(&a2, &a2.fundamental_weight(0), 2).is_err());
}

#[test]
fn morita_unit_a1() {
    let a1 = nh("A1");
    let unit = morita_unit(&a1, 2).unwrap();
    assert!(unit.verify(&a1).unwrap());
    assert!(unit.degree <= 2);
    // 1 = e + (-x/2) e θ_1.
    let e_part = unit.pairs.iter().find(|(_, r)| *r == NilHeckeElement::one(2)).unwrap();
    assert_eq!(e_part.0, NilHeckeElement::one(2));
    assert_eq!(morita_unit(&a1, 0).unwrap_err(), Error::NoSolution(0));
}

#[test]
fn module_criterion_on_polynomials_a1() {
    let d = RootDatum::build("A1").unwrap();
    let m = GradedModuleSlice::polynomials(&d, 5);
    let report = module_extension_check(&m, &d, 0).unwrap();
    assert_eq!(report.examined.len(), 5);
    for r in &report.examined {
        // x^d is s-invariant for even d; odd degrees have nothing on either side.
        let expected = if r.degree % 2 == 0 { (1, 1) } else { (0, 0) };
        assert_eq!((r.plus_dim, r.minus_dim), expected);
        assert!(r.bijective());
    }
    assert!(report.extends());
    assert!(report.theta_valid());
}

#[test]
fn module_criterion_regular_representation() {
    let d = RootDatum::build("A1").unwrap();
    let m = GradedModuleSlice::regular(&d);
    let report = module_extension_check(&m, &d, 0).unwrap();
    assert!(!report.checkable());
    assert!(report.theta.is_none());
}

#[test]
fn module_criterion_doubled() {
    let d = RootDatum::build("A1").unwrap();
    let m = GradedModuleSlice::doubled_polynomials(&d, 4);
    let report = module_extension_check(&m, &d, 0).unwrap();
    assert!(report.bijective_on_range());
    assert_eq!(report.examined[0].plus_dim, 1);
    // (1, -1) is anti-invariant in degree 0 and has no preimage.
    assert_eq!(report.base_minus_dim, 1);
    assert!(!report.extends());
}

#[test]
fn malformed_slices_are_rejected() {
    let d = RootDatum::build("A1").unwrap();
    let bad = GradedModuleSlice::new(vec![1, 1], vec![vec![crate::linalg::Matrix::identity(1)]], vec![]);
    assert!(matches!(bad, Err(Error::MalformedSlice(_))));
    let not_involution = GradedModuleSlice::new(
        vec![1],
        vec![vec![crate::linalg::Matrix::identity(1).scale(&rat(2))]],
        vec![],
    )
    .unwrap();
    assert!(module_extension_check(&not_involution, &d, 0).is_err());
}

#[test]
fn freeness_small() {
    let a1 = nh("A1");
    for w in crate::weyl::affine_ball(a1.datum(), 3) {
        assert_eq!(verify::check_freeness(&a1, &w), (true, true));
    }
}

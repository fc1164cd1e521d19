//! Plain-text rendering of group and algebra elements.

use nilhecke_core::weyl::reduced_word;
use nilhecke_core::{ExtAffineElement, NilHeckeElement, RootDatum, SkewElement};

/// `s0·s1`, `id`, or `ω(t=[..],w=[..])·s1` when a length-zero part is present.
pub fn group_text(datum: &RootDatum, g: &ExtAffineElement) -> String {
    let (omega, word) = reduced_word(datum, g);
    let mut parts: Vec<String> = Vec::new();
    if !omega.is_identity() {
        parts.push(format!("ω(t={:?},w={:?})", omega.translation.0, omega.finite.matrix()));
    }
    parts.extend(word.iter().map(|i| format!("s{}", i.0)));
    if parts.is_empty() {
        "id".to_string()
    } else {
        parts.join("·")
    }
}

pub fn skew_text(datum: &RootDatum, u: &SkewElement) -> String {
    if u.is_zero() {
        return "0".to_string();
    }
    u.terms().map(|(g, c)| format!("({c})[{}]", group_text(datum, g))).collect::<Vec<_>>().join(" + ")
}

pub fn nilhecke_text(datum: &RootDatum, u: &NilHeckeElement) -> String {
    if u.is_zero() {
        return "0".to_string();
    }
    u.terms().map(|(w, f)| format!("({f})θ[{}]", group_text(datum, w))).collect::<Vec<_>>().join(" + ")
}

//! JSON file formats.
//!
//! - root datum: `{"type": "G2", "rank": 2, "cartan": [[2,-3],[-1,2]], ...}`
//! - group element `t_μ w`: `{"t": [μ in fundamental weights], "w": [[matrix on weights]]}`
//! - coefficient: `{"num": [[exps, coeff], ...], "den": [[form, k], ...]}`, where
//!   `exps` and `form` have one entry per `x_i` followed by one for `h`, `coeff`
//!   is an integer or a `"p/q"` string and `k` is a multiplicity. A plain string
//!   is read as a polynomial in text form.
//! - skew element: `{"terms": [{"group": <group>, "coeff": <coefficient>}]}`
//! - nil-Hecke element: `{"terms": [{"index": <group>, "coeff": <polynomial>}]}`

use nilhecke_core::{
    AffineForm, ExtAffineElement, Monomial, NilHeckeElement, Rational, RootDatum, RootFraction, SkewElement,
    SparsePoly, Weight,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::text::parse_poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumJson {
    #[serde(rename = "type")]
    pub label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Simple-root coefficients.
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    /// Root whose reflection, shifted by `h`, gives the affine node.
    pub affine_root: Vec<i64>,
}

impl DatumJson {
    pub fn from_datum(d: &RootDatum) -> Self {
        DatumJson {
            label: d.label(),
            rank: d.rank,
            cartan: d.cartan.clone(),
            positive_roots: d.positive_roots.iter().map(|r| r.coeffs.clone()).collect(),
            highest_root: d.highest_root.coeffs.clone(),
            affine_root: d.affine_root.coeffs.clone(),
        }
    }

    /// Rebuilds the datum from its label and checks the stored data against it.
    pub fn to_datum(&self) -> CliResult<RootDatum> {
        let d = RootDatum::build(&self.label)?;
        if DatumJson::from_datum(&d) != *self {
            return Err(CliError::input("root datum", format!("data does not match type {}", self.label)));
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylJson {
    pub t: Vec<i64>,
    pub w: Vec<Vec<i64>>,
}

impl WeylJson {
    pub fn from_element(g: &ExtAffineElement) -> Self {
        WeylJson { t: g.translation.0.clone(), w: g.finite.matrix().clone() }
    }

    pub fn to_element(&self, datum: &RootDatum) -> CliResult<ExtAffineElement> {
        Ok(ExtAffineElement::new(datum, Weight(self.t.clone()), self.w.clone())?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalJson {
    Int(i64),
    Text(String),
}

impl RationalJson {
    pub fn from_rational(q: &Rational) -> Self {
        if q.is_integer() {
            if let Ok(n) = q.numer().to_string().parse::<i64>() {
                return RationalJson::Int(n);
            }
        }
        RationalJson::Text(q.to_string())
    }

    pub fn to_rational(&self) -> CliResult<Rational> {
        match self {
            RationalJson::Int(n) => Ok(Rational::from_integer((*n).into())),
            RationalJson::Text(s) => {
                let q: Rational = s.trim().parse().map_err(|_| CliError::input("rational", format!("{s:?}")))?;
                Ok(q)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionJson {
    pub num: Vec<(Vec<u16>, RationalJson)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub den: Vec<(Vec<i64>, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Text(String),
    Structured(FractionJson),
}

pub fn poly_to_json(p: &SparsePoly) -> CoeffJson {
    CoeffJson::Structured(FractionJson {
        num: p.sorted_terms().into_iter().map(|(m, c)| (m.0.clone(), RationalJson::from_rational(c))).collect(),
        den: Vec::new(),
    })
}

pub fn fraction_to_json(f: &RootFraction) -> CoeffJson {
    let CoeffJson::Structured(mut out) = poly_to_json(f.numerator()) else { unreachable!() };
    out.den = f.denominator().map(|(form, k)| (form.coeffs().to_vec(), k)).collect();
    CoeffJson::Structured(out)
}

fn numerator(num: &[(Vec<u16>, RationalJson)], nvars: usize) -> CliResult<SparsePoly> {
    let mut terms = Vec::with_capacity(num.len());
    for (exps, c) in num {
        if exps.len() != nvars {
            return Err(CliError::input(
                "coefficient",
                format!("exponent vector {exps:?} needs {nvars} entries (x1..x{} then h)", nvars - 1),
            ));
        }
        terms.push((Monomial(exps.clone()), c.to_rational()?));
    }
    Ok(SparsePoly::from_terms(nvars, terms)?)
}

pub fn fraction_from_json(c: &CoeffJson, nvars: usize) -> CliResult<RootFraction> {
    match c {
        CoeffJson::Text(s) => Ok(RootFraction::from_poly(parse_poly(s, nvars)?)),
        CoeffJson::Structured(f) => {
            let num = numerator(&f.num, nvars)?;
            let mut forms = Vec::new();
            for (coeffs, k) in &f.den {
                if coeffs.len() != nvars {
                    return Err(CliError::input("coefficient", format!("denominator form {coeffs:?} needs {nvars} entries")));
                }
                let form = AffineForm::new(coeffs.clone())?;
                forms.extend(std::iter::repeat_n(form, *k as usize));
            }
            Ok(RootFraction::new(num, forms)?)
        }
    }
}

pub fn poly_from_json(c: &CoeffJson, nvars: usize) -> CliResult<SparsePoly> {
    match c {
        CoeffJson::Text(s) => parse_poly(s, nvars),
        CoeffJson::Structured(f) if f.den.is_empty() => numerator(&f.num, nvars),
        CoeffJson::Structured(_) => Err(CliError::input("coefficient", "nil-Hecke coefficients are polynomials; drop \"den\"")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewTermJson {
    pub group: WeylJson,
    pub coeff: CoeffJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewJson {
    pub terms: Vec<SkewTermJson>,
}

impl SkewJson {
    pub fn from_element(u: &SkewElement) -> Self {
        SkewJson {
            terms: u
                .terms()
                .map(|(g, c)| SkewTermJson { group: WeylJson::from_element(g), coeff: fraction_to_json(c) })
                .collect(),
        }
    }

    pub fn to_element(&self, datum: &RootDatum) -> CliResult<SkewElement> {
        let nvars = datum.rank + 1;
        let mut out = SkewElement::zero(nvars);
        for t in &self.terms {
            out.add_term(t.group.to_element(datum)?, fraction_from_json(&t.coeff, nvars)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilHeckeTermJson {
    pub index: WeylJson,
    pub coeff: CoeffJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilHeckeJson {
    pub terms: Vec<NilHeckeTermJson>,
}

impl NilHeckeJson {
    pub fn from_element(u: &NilHeckeElement) -> Self {
        NilHeckeJson {
            terms: u
                .terms()
                .map(|(w, f)| NilHeckeTermJson { index: WeylJson::from_element(w), coeff: poly_to_json(f) })
                .collect(),
        }
    }

    pub fn to_element(&self, datum: &RootDatum) -> CliResult<NilHeckeElement> {
        let nvars = datum.rank + 1;
        let mut out = NilHeckeElement::zero(nvars);
        for t in &self.terms {
            out.add_term(t.index.to_element(datum)?, poly_from_json(&t.coeff, nvars)?);
        }
        Ok(out)
    }
}

/// Parses JSON text, reporting the position of any syntax error.
pub fn parse_json<T: DeserializeOwned>(what: &str, src: &str) -> CliResult<T> {
    serde_json::from_str(src).map_err(|e| CliError::json(what, &e))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("format types always serialize")
}

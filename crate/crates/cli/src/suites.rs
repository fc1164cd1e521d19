//! Named verification suites.
//!
//! A suite expands into cases for each root datum it runs on. Every case is
//! a self-contained JSON value, so a failing one can be replayed with
//! `nh verify --case <json>`. Cases of one datum run in order on a single
//! worker; different data run on separate threads, and reports come back in
//! the order the types were requested.

use std::collections::BTreeSet;
use std::thread;
use std::time::{Duration, Instant};

use nilhecke_core::nilhecke::module::GradedModuleSlice;
use nilhecke_core::nilhecke::phi::{image_commutation, image_squares_to_zero, verify_phi2};
use nilhecke_core::nilhecke::verify::{
    braid_order, check_defrel, check_freeness, commutes_with_theta, faithfulness_rank, inverse_root_scalar,
    invariant_polynomials, verify_th0, Probe,
};
use nilhecke_core::nilhecke::{module_extension_check, morita_unit};
use nilhecke_core::skew::{check_ddh, e_mu, theta_simple};
use nilhecke_core::weyl::{affine_ball, all_reduced_words, check_index, finite_group};
use nilhecke_core::{AffineSimpleIndex, ExtAffineElement, NilHecke, RootDatum, SkewElement, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::display::{group_text, skew_text};
use crate::error::{CliError, CliResult};
use crate::format::WeylJson;
use crate::text::parse_poly;

/// Every suite, in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "braid",
    "words",
    "defrel",
    "ddh",
    "th0",
    "membership",
    "faithful",
    "phi2",
    "spherical",
    "morita-unit",
    "module",
    "freeness",
];

pub const DEFAULT_BUDGET_SECONDS: u64 = 120;

/// Types a suite runs on when none are given.
pub fn default_types(suite: &str) -> &'static [&'static str] {
    match suite {
        "braid" => &["A1", "A2", "A3", "B2", "C2", "G2"],
        "words" => &["A1", "A2", "B2"],
        "defrel" | "ddh" => &["A1", "A2", "A3", "B2", "G2"],
        "th0" => &["A1", "A2", "B2", "C2", "G2"],
        "membership" | "faithful" | "module" => &["A1", "A2"],
        "phi2" => &["A1", "A2", "B2"],
        "spherical" => &["A1", "A2", "A3", "B2"],
        "morita-unit" => &["A1", "A2"],
        "freeness" => &["A1", "A2", "B2", "G2"],
        _ => &[],
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub types: Option<Vec<String>>,
    /// Length bound for affine elements in `words` and `freeness`.
    pub max_length: Option<usize>,
    /// Degree bound for `faithful`, `spherical`, `morita-unit` and `module`.
    pub max_degree: Option<usize>,
    pub seed: u64,
    pub budget: Duration,
    /// Random elements per datum in `membership`, for each of the two kinds.
    pub samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            types: None,
            max_length: None,
            max_degree: None,
            seed: 0,
            budget: Duration::from_secs(DEFAULT_BUDGET_SECONDS),
            samples: 100,
        }
    }
}

/// One generator in a random product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Factor {
    Theta(usize),
    Character(Vec<i64>),
    Poly(String),
}

/// A single re-runnable check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "kebab-case")]
pub enum Case {
    /// `θ_i² = 0` when `order` is 0, otherwise the braid relation of that length.
    Braid {
        #[serde(rename = "type")]
        label: String,
        nodes: (usize, usize),
        order: usize,
    },
    Words {
        #[serde(rename = "type")]
        label: String,
        elem: WeylJson,
    },
    /// `probe` is a coroot index, or absent for `h`.
    Defrel {
        #[serde(rename = "type")]
        label: String,
        node: usize,
        #[serde(default)]
        probe: Option<usize>,
    },
    Ddh {
        #[serde(rename = "type")]
        label: String,
        weight: usize,
        coroot: usize,
    },
    Th0 {
        #[serde(rename = "type")]
        label: String,
    },
    Product {
        #[serde(rename = "type")]
        label: String,
        factors: Vec<Factor>,
    },
    /// A product plus `(1/α̌)[id]` for the root `α` given in weight coordinates.
    Corrupted {
        #[serde(rename = "type")]
        label: String,
        factors: Vec<Factor>,
        root: Vec<i64>,
    },
    Faithful {
        #[serde(rename = "type")]
        label: String,
        coeff_degree: u32,
        test_degree: u32,
    },
    PhiSquare {
        #[serde(rename = "type")]
        label: String,
        node: usize,
    },
    PhiDefrel {
        #[serde(rename = "type")]
        label: String,
        node: usize,
        coroot: usize,
    },
    Phi2 {
        #[serde(rename = "type")]
        label: String,
        weight: usize,
        root: usize,
    },
    Idempotent {
        #[serde(rename = "type")]
        label: String,
    },
    Central {
        #[serde(rename = "type")]
        label: String,
        poly: String,
        node: usize,
    },
    Spherical {
        #[serde(rename = "type")]
        label: String,
        poly: String,
    },
    Morita {
        #[serde(rename = "type")]
        label: String,
        max_degree: usize,
    },
    Module {
        #[serde(rename = "type")]
        label: String,
        top: usize,
        root: usize,
    },
    Freeness {
        #[serde(rename = "type")]
        label: String,
        elem: WeylJson,
    },
}

impl Case {
    pub fn label(&self) -> &str {
        match self {
            Case::Braid { label, .. }
            | Case::Words { label, .. }
            | Case::Defrel { label, .. }
            | Case::Ddh { label, .. }
            | Case::Th0 { label }
            | Case::Product { label, .. }
            | Case::Corrupted { label, .. }
            | Case::Faithful { label, .. }
            | Case::PhiSquare { label, .. }
            | Case::PhiDefrel { label, .. }
            | Case::Phi2 { label, .. }
            | Case::Idempotent { label }
            | Case::Central { label, .. }
            | Case::Spherical { label, .. }
            | Case::Morita { label, .. }
            | Case::Module { label, .. }
            | Case::Freeness { label, .. } => label,
        }
    }

    pub fn suite(&self) -> &'static str {
        match self {
            Case::Braid { .. } => "braid",
            Case::Words { .. } => "words",
            Case::Defrel { .. } => "defrel",
            Case::Ddh { .. } => "ddh",
            Case::Th0 { .. } => "th0",
            Case::Product { .. } | Case::Corrupted { .. } => "membership",
            Case::Faithful { .. } => "faithful",
            Case::PhiSquare { .. } | Case::PhiDefrel { .. } | Case::Phi2 { .. } => "phi2",
            Case::Idempotent { .. } | Case::Central { .. } | Case::Spherical { .. } => "spherical",
            Case::Morita { .. } => "morita-unit",
            Case::Module { .. } => "module",
            Case::Freeness { .. } => "freeness",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub id: String,
    /// Absent when the failure is not tied to one case (budget overrun).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<Case>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    #[serde(rename = "type")]
    pub datum: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Kept off the serialized report so that output depends only on flags.
    #[serde(skip)]
    pub duration: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn fail(detail: impl Into<String>) -> CliResult<Result<(), String>> {
    Ok(Err(detail.into()))
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> CliResult<Result<(), String>> {
    Ok(if ok { Ok(()) } else { Err(detail()) })
}

fn node(datum: &RootDatum, i: usize) -> CliResult<AffineSimpleIndex> {
    let i = AffineSimpleIndex(i);
    check_index(datum, i)?;
    Ok(i)
}

fn finite_index(datum: &RootDatum, i: usize) -> CliResult<usize> {
    if i >= datum.rank {
        return Err(CliError::input("case", format!("index {i} out of range for rank {}", datum.rank)));
    }
    Ok(i)
}

fn alternating(datum: &RootDatum, a: AffineSimpleIndex, b: AffineSimpleIndex, m: usize) -> CliResult<SkewElement> {
    let ta = theta_simple(datum, a)?;
    let tb = theta_simple(datum, b)?;
    let mut out = SkewElement::one(datum.rank + 1);
    for k in 0..m {
        out = &out * if k % 2 == 0 { &ta } else { &tb };
    }
    Ok(out)
}

pub fn factor_element(datum: &RootDatum, f: &Factor) -> CliResult<SkewElement> {
    match f {
        Factor::Theta(i) => Ok(theta_simple(datum, node(datum, *i)?)?),
        Factor::Character(mu) => {
            if mu.len() != datum.rank {
                return Err(CliError::input("factor", format!("weight {mu:?} needs {} entries", datum.rank)));
            }
            Ok(e_mu(&Weight(mu.clone())))
        }
        Factor::Poly(s) => Ok(SkewElement::poly(parse_poly(s, datum.rank + 1)?)),
    }
}

pub fn product(datum: &RootDatum, factors: &[Factor]) -> CliResult<SkewElement> {
    let mut out = SkewElement::one(datum.rank + 1);
    for f in factors {
        out = &out * &factor_element(datum, f)?;
    }
    Ok(out)
}

/// Checks a membership verdict: accepted, with an expansion that reproduces `u`.
fn round_trip(nh: &NilHecke, u: &SkewElement) -> CliResult<Result<(), String>> {
    match nh.membership(u) {
        Err(rej) => fail(format!("rejected: coefficient {} at {}", rej.coeff, group_text(nh.datum(), &rej.index))),
        Ok(v) => verdict(nh.expand(&v) == *u, || "expansion does not reproduce the element".to_string()),
    }
}

/// Runs one case; `Ok(Err(detail))` is a failed check.
pub fn run_case(nh: &NilHecke, case: &Case) -> CliResult<Result<(), String>> {
    let datum = nh.datum();
    match case {
        Case::Braid { nodes: (i, j), order, .. } => {
            let (a, b) = (node(datum, *i)?, node(datum, *j)?);
            if *order == 0 {
                let t = theta_simple(datum, a)?;
                return verdict(i == j && (&t * &t).is_zero(), || format!("θ_{i}² ≠ 0"));
            }
            if braid_order(datum, a, b) != Some(*order) {
                return fail(format!("s{i}·s{j} does not have order {order}"));
            }
            let lhs = alternating(datum, a, b, *order)?;
            let rhs = alternating(datum, b, a, *order)?;
            verdict(lhs == rhs, || format!("alternating products of length {order} differ for nodes {i}, {j}"))
        }
        Case::Words { elem, .. } => {
            let w = elem.to_element(datum)?;
            let expected = nh.theta(&w);
            for word in all_reduced_words(datum, &w) {
                if nh.theta_word(&word)? != expected {
                    let word: Vec<usize> = word.iter().map(|i| i.0).collect();
                    return fail(format!("word {word:?} of {} gives a different θ", group_text(datum, &w)));
                }
            }
            Ok(Ok(()))
        }
        Case::Defrel { node: i, probe, .. } => {
            let p = match probe {
                Some(k) => Probe::Coroot(finite_index(datum, *k)?),
                None => Probe::Hbar,
            };
            verdict(check_defrel(datum, node(datum, *i)?, p)?, || format!("commutation relation fails for node {i}"))
        }
        Case::Ddh { weight, coroot, .. } => {
            let mu = datum.fundamental_weight(finite_index(datum, *weight)?);
            let xi = datum.simple_coroot(finite_index(datum, *coroot)?);
            verdict(check_ddh(datum, &mu, &xi)?, || "ξ e^μ ≠ e^μ (ξ + <μ,ξ> h)".to_string())
        }
        Case::Th0 { .. } => {
            let c = verify_th0(datum)?;
            verdict(c.holds(), || {
                let sign = if c.lhs == -&c.rhs { " (the two sides differ by a sign)" } else { "" };
                format!(
                    "e^μ θ_δ e^(-μ) ≠ θ_0 for μ = {:?}{sign}; lhs = {}; rhs = {}",
                    c.mu.0,
                    skew_text(datum, &c.lhs),
                    skew_text(datum, &c.rhs)
                )
            })
        }
        Case::Product { factors, .. } => round_trip(nh, &product(datum, factors)?),
        Case::Corrupted { factors, root, .. } => {
            let noise = inverse_root_scalar(datum, &Weight(root.clone()))?;
            let u = &product(datum, factors)? + &noise;
            match nh.membership(&u) {
                Ok(_) => fail("corrupted element was accepted"),
                Err(rej) if rej.coeff.is_polynomial().is_some() => fail("rejection witness is a polynomial"),
                Err(_) => Ok(Ok(())),
            }
        }
        Case::Faithful { coeff_degree, test_degree, .. } => {
            let (rank, count) = faithfulness_rank(nh, *coeff_degree, *test_degree)?;
            verdict(rank == count, || format!("rank {rank} < {count} spanning elements"))
        }
        Case::PhiSquare { node: i, .. } => {
            verdict(image_squares_to_zero(datum, node(datum, *i)?)?, || format!("Φ(θ_{i})² ≠ 0"))
        }
        Case::PhiDefrel { node: i, coroot, .. } => verdict(
            image_commutation(datum, node(datum, *i)?, finite_index(datum, *coroot)?)?,
            || format!("commutation relation fails at h = 0 for node {i}"),
        ),
        Case::Phi2 { weight, root, .. } => {
            let mu = datum.fundamental_weight(finite_index(datum, *weight)?);
            verdict(verify_phi2(datum, &mu, finite_index(datum, *root)?)?, || "identity fails".to_string())
        }
        Case::Idempotent { .. } => {
            let e = nh.symmetrizer();
            verdict(nh.mul(&e, &e)? == e, || "e² ≠ e".to_string())
        }
        Case::Central { poly, node: i, .. } => {
            let f = parse_poly(poly, nh.nvars())?;
            verdict(commutes_with_theta(datum, &f, node(datum, *i)?)?, || format!("{poly} does not commute with θ_{i}"))
        }
        Case::Spherical { poly, .. } => {
            let f = nh.poly(parse_poly(poly, nh.nvars())?);
            let e = nh.symmetrizer();
            let lhs = nh.mul(&nh.mul(&e, &f)?, &e)?;
            verdict(lhs == nh.mul(&f, &e)?, || format!("e·({poly})·e ≠ ({poly})·e"))
        }
        Case::Morita { max_degree, .. } => match morita_unit(nh, *max_degree) {
            Ok(unit) => verdict(unit.verify(nh)?, || "returned decomposition does not sum to 1".to_string()),
            Err(e) => fail(e.to_string()),
        },
        Case::Module { top, root, .. } => {
            let m = GradedModuleSlice::polynomials(datum, *top);
            let r = module_extension_check(&m, datum, finite_index(datum, *root)?)?;
            let bad: Vec<usize> = r.examined.iter().filter(|d| !d.bijective()).map(|d| d.degree).collect();
            verdict(r.extends() && r.theta_valid(), || {
                format!(
                    "degrees {bad:?} not bijective, dim M_0⁻ = {}, θ relations: square {:?}, commutation {:?}, reflection {:?}",
                    r.base_minus_dim, r.theta_squares_to_zero, r.theta_commutation, r.reflection_identity
                )
            })
        }
        Case::Freeness { elem, .. } => {
            let w = elem.to_element(datum)?;
            let (generic, zero) = check_freeness(nh, &w);
            verdict(generic && zero, || {
                format!("θ_w does not round-trip for w = {} (generic {generic}, h = 0 {zero})", group_text(datum, &w))
            })
        }
    }
}

fn label_stream(label: &str) -> u64 {
    label.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> String {
    let mut f = nilhecke_core::SparsePoly::zero(nvars);
    for _ in 0..rng.gen_range(1..=3) {
        let mut exps = vec![0u16; nvars];
        for _ in 0..rng.gen_range(0..=2) {
            exps[rng.gen_range(0..nvars)] += 1;
        }
        let c = [-3i64, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
        f.add_term(nilhecke_core::Monomial(exps), nilhecke_core::exactalg::rat(c));
    }
    if f.is_zero() {
        f = nilhecke_core::SparsePoly::one(nvars);
    }
    f.to_string()
}

fn random_factors(rng: &mut ChaCha8Rng, datum: &RootDatum) -> Vec<Factor> {
    let n = rng.gen_range(2..=5);
    (0..n)
        .map(|_| match rng.gen_range(0..20) {
            0..=8 => Factor::Theta(rng.gen_range(0..=datum.rank)),
            9..=13 => {
                let j = rng.gen_range(0..datum.rank);
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                Factor::Character(datum.fundamental_weight(j).scale(sign).0)
            }
            _ => Factor::Poly(random_poly(rng, datum.rank + 1)),
        })
        .collect()
}

fn elements(datum: &RootDatum, finite_bound: usize, affine_bound: usize) -> Vec<ExtAffineElement> {
    let mut seen = BTreeSet::new();
    let finite = finite_group(datum).into_iter().map(ExtAffineElement::from_finite);
    finite
        .filter(|w| w.length(datum) <= finite_bound)
        .chain(affine_ball(datum, affine_bound))
        .filter(|w| seen.insert(w.clone()))
        .collect()
}

/// Expands a suite into its cases for one datum.
pub fn cases(suite: &str, nh: &NilHecke, opts: &SuiteOptions) -> CliResult<Vec<Case>> {
    let datum = nh.datum();
    let label = datum.label();
    let l = || label.clone();
    let rank = datum.rank;
    let nodes = || 0..=rank;
    let mut out = Vec::new();
    match suite {
        "braid" => {
            for i in nodes() {
                out.push(Case::Braid { label: l(), nodes: (i, i), order: 0 });
            }
            for i in nodes() {
                for j in i + 1..=rank {
                    if let Some(order) = braid_order(datum, AffineSimpleIndex(i), AffineSimpleIndex(j)) {
                        out.push(Case::Braid { label: l(), nodes: (i, j), order });
                    }
                }
            }
        }
        "words" => {
            for w in elements(datum, usize::MAX, opts.max_length.unwrap_or(5)) {
                out.push(Case::Words { label: l(), elem: WeylJson::from_element(&w) });
            }
        }
        "defrel" => {
            for i in nodes() {
                for k in 0..rank {
                    out.push(Case::Defrel { label: l(), node: i, probe: Some(k) });
                }
                out.push(Case::Defrel { label: l(), node: i, probe: None });
            }
        }
        "ddh" => {
            for m in 0..rank {
                for k in 0..rank {
                    out.push(Case::Ddh { label: l(), weight: m, coroot: k });
                }
            }
        }
        "th0" => out.push(Case::Th0 { label: l() }),
        "membership" => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(label_stream(&label));
            for _ in 0..opts.samples {
                out.push(Case::Product { label: l(), factors: random_factors(&mut rng, datum) });
            }
            for _ in 0..opts.samples {
                let factors = random_factors(&mut rng, datum);
                let root = datum.positive_roots[rng.gen_range(0..datum.positive_roots.len())].weight.0.clone();
                out.push(Case::Corrupted { label: l(), factors, root });
            }
        }
        "faithful" => {
            let test_degree = opts.max_degree.unwrap_or(6) as u32;
            out.push(Case::Faithful { label: l(), coeff_degree: test_degree / 2, test_degree });
        }
        "phi2" => {
            for i in nodes() {
                out.push(Case::PhiSquare { label: l(), node: i });
            }
            for i in nodes() {
                for k in 0..rank {
                    out.push(Case::PhiDefrel { label: l(), node: i, coroot: k });
                }
            }
            for m in 0..rank {
                for j in 0..rank {
                    out.push(Case::Phi2 { label: l(), weight: m, root: j });
                }
            }
        }
        "spherical" => {
            out.push(Case::Idempotent { label: l() });
            for f in invariant_polynomials(datum, opts.max_degree.unwrap_or(4) as u32)? {
                let poly = f.to_string();
                for i in 1..=rank {
                    out.push(Case::Central { label: l(), poly: poly.clone(), node: i });
                }
                out.push(Case::Spherical { label: l(), poly });
            }
        }
        "morita-unit" => {
            let max_degree = opts.max_degree.unwrap_or(if rank == 1 { 2 } else { 4 });
            out.push(Case::Morita { label: l(), max_degree });
        }
        "module" => {
            let top = opts.max_degree.unwrap_or(6);
            for j in 0..rank {
                out.push(Case::Module { label: l(), top, root: j });
            }
        }
        "freeness" => {
            for w in elements(datum, usize::MAX, opts.max_length.unwrap_or(5)) {
                out.push(Case::Freeness { label: l(), elem: WeylJson::from_element(&w) });
            }
        }
        other => return Err(CliError::Usage(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    }
    Ok(out)
}

fn run_group(suite: &str, label: &str, opts: &SuiteOptions, start: Instant) -> CliResult<SuiteReport> {
    let nh = NilHecke::build(label)?;
    let label = nh.datum().label();
    let all = cases(suite, &nh, opts)?;
    let width = all.len().to_string().len();
    let mut failures = Vec::new();
    let mut ran = 0;
    for (k, case) in all.iter().enumerate() {
        if start.elapsed() > opts.budget {
            failures.push(Failure {
                id: format!("{label}/{suite}/budget"),
                case: None,
                detail: format!("time budget of {}s exceeded after {ran} of {} cases", opts.budget.as_secs(), all.len()),
            });
            break;
        }
        let id = format!("{label}/{suite}/{k:0width$}");
        let detail = match run_case(&nh, case) {
            Ok(Ok(())) => None,
            Ok(Err(detail)) => Some(detail),
            Err(e) => Some(format!("error: {e}")),
        };
        if let Some(detail) = detail {
            failures.push(Failure { id, case: Some(case.clone()), detail });
        }
        ran += 1;
    }
    failures.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(SuiteReport { suite: suite.to_string(), datum: label, cases: ran, failures, duration: start.elapsed() })
}

/// Runs a suite on each requested type, one thread per type.
pub fn run_suite(suite: &str, opts: &SuiteOptions) -> CliResult<Vec<SuiteReport>> {
    if !SUITES.contains(&suite) {
        return Err(CliError::Usage(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "))));
    }
    let types: Vec<String> = match &opts.types {
        Some(t) => t.clone(),
        None => default_types(suite).iter().map(|s| s.to_string()).collect(),
    };
    for t in &types {
        RootDatum::build(t)?;
    }
    let start = Instant::now();
    let results: Vec<CliResult<SuiteReport>> = thread::scope(|scope| {
        let handles: Vec<_> = types.iter().map(|t| scope.spawn(move || run_group(suite, t, opts, start))).collect();
        handles.into_iter().map(|h| h.join().expect("suite worker panicked")).collect()
    });
    results.into_iter().collect()
}

/// Runs every suite in the registry.
pub fn run_all(opts: &SuiteOptions) -> CliResult<Vec<SuiteReport>> {
    let mut out = Vec::new();
    for suite in SUITES {
        out.extend(run_suite(suite, opts)?);
    }
    Ok(out)
}

/// Replays a single serialized case.
pub fn run_single(case: &Case) -> CliResult<SuiteReport> {
    let start = Instant::now();
    let nh = NilHecke::build(case.label())?;
    let detail = run_case(&nh, case)?;
    let failures = match detail {
        Ok(()) => Vec::new(),
        Err(detail) => vec![Failure { id: "case".to_string(), case: Some(case.clone()), detail }],
    };
    Ok(SuiteReport {
        suite: case.suite().to_string(),
        datum: nh.datum().label(),
        cases: 1,
        failures,
        duration: start.elapsed(),
    })
}

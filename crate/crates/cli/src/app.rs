//! Argument parsing and command dispatch.

use std::io::{Read, Write};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use nilhecke_core::weyl::reduced_word;
use nilhecke_core::{NilHecke, RootDatum, SkewElement};
use serde::Serialize;

use crate::display::{group_text, nilhecke_text, skew_text};
use crate::error::{CliError, CliResult};
use crate::format::{
    fraction_to_json, parse_json, to_json, DatumJson, NilHeckeJson, SkewJson, WeylJson,
};
use crate::suites::{self, Case, SuiteOptions, SuiteReport, DEFAULT_BUDGET_SECONDS};
use crate::text::parse_poly;

#[derive(Debug, Parser)]
#[command(name = "nilhecke", version, about = "Exact computations in degenerate nil-Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Cartan type such as A2, B3 or G2.
    #[arg(long = "type", value_name = "TYPE")]
    cartan_type: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Root data.
    Root {
        #[command(subcommand)]
        command: RootCommand,
    },
    /// Extended affine Weyl group elements.
    Weyl {
        #[command(subcommand)]
        command: WeylCommand,
    },
    /// The skew group algebra.
    Skew {
        #[command(subcommand)]
        command: SkewCommand,
    },
    /// The nil-Hecke algebra in the theta basis.
    Nh {
        #[command(subcommand)]
        command: NhCommand,
    },
}

#[derive(Debug, Subcommand)]
enum RootCommand {
    /// Cartan matrix and roots.
    Show {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand)]
enum WeylCommand {
    /// Canonical reduced word `ω·s_{i1}...s_{ik}`.
    ReducedWord {
        #[command(flatten)]
        common: Common,
        /// Element as JSON, a file path, or `-` for stdin.
        #[arg(long)]
        elem: String,
    },
    Length {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        elem: String,
    },
}

#[derive(Debug, Subcommand)]
enum SkewCommand {
    /// Product of the given elements, left to right.
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(long, required = true, num_args = 1)]
        elem: Vec<String>,
    },
    /// Action of an element on a polynomial.
    Act {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        elem: String,
        /// Polynomial in text form, e.g. `3/2*x1^2*h - x2`.
        #[arg(long)]
        poly: String,
    },
}

#[derive(Debug, Subcommand)]
enum NhCommand {
    /// Product of the given elements, left to right.
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(long, required = true, num_args = 1)]
        elem: Vec<String>,
    },
    /// Decides whether a skew element lies in the nil-Hecke algebra.
    Membership {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        elem: String,
    },
    /// Runs a verification suite, `all`, or one serialized case.
    Verify {
        /// One of the registered suites, or `all`.
        suite: Option<String>,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET_SECONDS)]
        budget_seconds: u64,
        /// A case from a failure report, as JSON or a file path.
        #[arg(long)]
        case: Option<String>,
    },
}

/// Output of a command: what to print and whether the checks passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn datum(common: &Common) -> CliResult<RootDatum> {
    let label = common.cartan_type.as_deref().ok_or_else(|| CliError::Usage("--type is required".to_string()))?;
    Ok(RootDatum::build(label)?)
}

/// Inline JSON, `-` for stdin, or a path.
fn read_input(arg: &str) -> CliResult<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') || trimmed.starts_with('"') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io { path: "stdin".into(), source })?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|source| CliError::Io { path: arg.to_string(), source })
}

fn load<T: serde::de::DeserializeOwned>(what: &str, arg: &str) -> CliResult<T> {
    parse_json(what, &read_input(arg)?)
}

fn render<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> String {
    if json {
        to_json(value)
    } else {
        text()
    }
}

fn root_show(common: &Common) -> CliResult<Outcome> {
    let d = datum(common)?;
    let j = DatumJson::from_datum(&d);
    Ok(Outcome::ok(render(common.json, &j, || {
        let mut s = format!("type {}\nrank {}\ncartan", j.label, j.rank);
        for row in &j.cartan {
            s.push_str(&format!("\n  {row:?}"));
        }
        s.push_str(&format!("\npositive roots {:?}", j.positive_roots));
        s.push_str(&format!("\nhighest root {:?}\naffine root {:?}", j.highest_root, j.affine_root));
        s
    })))
}

#[derive(Serialize)]
struct ReducedWordJson {
    omega: WeylJson,
    word: Vec<usize>,
}

fn weyl(command: &WeylCommand) -> CliResult<Outcome> {
    match command {
        WeylCommand::ReducedWord { common, elem } => {
            let d = datum(common)?;
            let g = load::<WeylJson>("--elem", elem)?.to_element(&d)?;
            let (omega, word) = reduced_word(&d, &g);
            let out = ReducedWordJson { omega: WeylJson::from_element(&omega), word: word.iter().map(|i| i.0).collect() };
            Ok(Outcome::ok(render(common.json, &out, || group_text(&d, &g))))
        }
        WeylCommand::Length { common, elem } => {
            let d = datum(common)?;
            let g = load::<WeylJson>("--elem", elem)?.to_element(&d)?;
            Ok(Outcome::ok(g.length(&d).to_string()))
        }
    }
}

fn skew(command: &SkewCommand) -> CliResult<Outcome> {
    match command {
        SkewCommand::Mul { common, elem } => {
            let d = datum(common)?;
            let mut out = SkewElement::one(d.rank + 1);
            for e in elem {
                out = out.try_mul(&load::<SkewJson>("--elem", e)?.to_element(&d)?)?;
            }
            Ok(Outcome::ok(render(common.json, &SkewJson::from_element(&out), || skew_text(&d, &out))))
        }
        SkewCommand::Act { common, elem, poly } => {
            let d = datum(common)?;
            let u = load::<SkewJson>("--elem", elem)?.to_element(&d)?;
            let f = u.act(&parse_poly(poly, d.rank + 1)?)?;
            Ok(Outcome::ok(render(common.json, &fraction_to_json(&f), || f.to_string())))
        }
    }
}

#[derive(Serialize)]
struct RejectionJson {
    member: bool,
    index: WeylJson,
    coeff: crate::format::CoeffJson,
}

fn verify_options(
    common: &Common,
    max_length: Option<usize>,
    max_degree: Option<usize>,
    seed: u64,
    budget_seconds: u64,
) -> SuiteOptions {
    SuiteOptions {
        types: common.cartan_type.as_ref().map(|t| vec![t.clone()]),
        max_length,
        max_degree,
        seed,
        budget: Duration::from_secs(budget_seconds),
        ..SuiteOptions::default()
    }
}

/// Text form of a list of reports.
pub fn report_text(reports: &[SuiteReport]) -> String {
    let single = reports.len() == 1;
    let mut lines = Vec::new();
    for r in reports {
        let head = if single { r.suite.clone() } else { format!("{} {}", r.suite, r.datum) };
        let noun = if r.cases == 1 { "identity" } else { "identities" };
        if r.passed() {
            lines.push(format!("{head}: OK ({} {noun}, exact)", r.cases));
            continue;
        }
        let failed = r.failures.iter().filter(|f| f.case.is_some()).count();
        lines.push(format!("{head}: FAILED ({failed} of {} {noun}, exact)", r.cases));
        for f in &r.failures {
            lines.push(format!("  {}: {}", f.id, f.detail));
            if let Some(case) = &f.case {
                lines.push(format!("    rerun: nilhecke nh verify --case '{}'", to_json(case)));
            }
        }
    }
    lines.join("\n")
}

fn nh(command: &NhCommand, stderr: &mut dyn Write) -> CliResult<Outcome> {
    match command {
        NhCommand::Mul { common, elem } => {
            let nh = NilHecke::new(datum(common)?);
            let mut out = nilhecke_core::NilHeckeElement::one(nh.nvars());
            for e in elem {
                out = nh.mul(&out, &load::<NilHeckeJson>("--elem", e)?.to_element(nh.datum())?)?;
            }
            Ok(Outcome::ok(render(common.json, &NilHeckeJson::from_element(&out), || nilhecke_text(nh.datum(), &out))))
        }
        NhCommand::Membership { common, elem } => {
            let nh = NilHecke::new(datum(common)?);
            let u = load::<SkewJson>("--elem", elem)?.to_element(nh.datum())?;
            match nh.membership(&u) {
                Ok(v) => {
                    let text = render(common.json, &NilHeckeJson::from_element(&v), || nilhecke_text(nh.datum(), &v));
                    Ok(Outcome::ok(text))
                }
                Err(rej) => {
                    let j = RejectionJson {
                        member: false,
                        index: WeylJson::from_element(&rej.index),
                        coeff: fraction_to_json(&rej.coeff),
                    };
                    let text = render(common.json, &j, || {
                        format!(
                            "not a member: coefficient {} at {} is not a polynomial",
                            rej.coeff,
                            group_text(nh.datum(), &rej.index)
                        )
                    });
                    Ok(Outcome { text, passed: false })
                }
            }
        }
        NhCommand::Verify { suite, common, max_length, max_degree, seed, budget_seconds, case } => {
            let reports = match (suite.as_deref(), case) {
                (_, Some(c)) => {
                    let case: Case = load("--case", c)?;
                    vec![suites::run_single(&case)?]
                }
                (Some("all"), None) => {
                    suites::run_all(&verify_options(common, *max_length, *max_degree, *seed, *budget_seconds))?
                }
                (Some(s), None) => {
                    suites::run_suite(s, &verify_options(common, *max_length, *max_degree, *seed, *budget_seconds))?
                }
                (None, None) => return Err(CliError::Usage("nh verify needs a suite name or --case".to_string())),
            };
            for r in &reports {
                let _ = writeln!(stderr, "{} {}: {:.3}s", r.suite, r.datum, r.duration.as_secs_f64());
            }
            let passed = reports.iter().all(SuiteReport::passed);
            Ok(Outcome { text: render(common.json, &reports, || report_text(&reports)), passed })
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code: 0 when every check passes, 1 on a failed check, 2 on a
/// usage or input error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{rendered}") } else { write!(stderr, "{rendered}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Root { command: RootCommand::Show { common } } => root_show(common),
        Command::Weyl { command } => weyl(command),
        Command::Skew { command } => skew(command),
        Command::Nh { command } => nh(command, stderr),
    };
    match result {
        Ok(outcome) => {
            let _ = writeln!(stdout, "{}", outcome.text);
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

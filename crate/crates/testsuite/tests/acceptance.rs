//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the verdict lines always reach the terminal; the process exits
//! non-zero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nilhecke::app::report_text;
use nilhecke::suites::{run_suite, SuiteOptions, SuiteReport};

struct Criterion {
    name: &'static str,
    /// Suite name, types and degree bound.
    runs: &'static [(&'static str, &'static [&'static str], Option<usize>)],
    budget_seconds: u64,
    max_length: Option<usize>,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        name: "braid and nil relations",
        runs: &[("braid", &["A1", "A2", "A3", "B2", "C2", "G2"], None)],
        budget_seconds: 30,
        max_length: None,
    },
    Criterion {
        name: "reduced-word invariance",
        runs: &[("words", &["A1", "A2", "B2"], None)],
        budget_seconds: 120,
        max_length: Some(5),
    },
    Criterion {
        name: "commutation relations",
        runs: &[("defrel", &["A1", "A2", "A3", "B2", "G2"], None), ("ddh", &["A1", "A2", "A3", "B2", "G2"], None)],
        budget_seconds: 20,
        max_length: None,
    },
    Criterion {
        name: "affine generator by conjugation",
        runs: &[("th0", &["A1", "A2", "B2", "C2", "G2"], None)],
        budget_seconds: 20,
        max_length: None,
    },
    Criterion {
        name: "membership decision",
        runs: &[("membership", &["A1", "A2"], None)],
        budget_seconds: 120,
        max_length: None,
    },
    Criterion {
        name: "faithfulness rank",
        runs: &[("faithful", &["A1", "A2"], Some(6))],
        budget_seconds: 60,
        max_length: None,
    },
    Criterion {
        name: "h = 0 homomorphism",
        runs: &[("phi2", &["A1", "A2", "B2"], None)],
        budget_seconds: 30,
        max_length: None,
    },
    Criterion {
        name: "symmetrizer and spherical structure",
        runs: &[("spherical", &["A1", "A2", "A3", "B2"], Some(4))],
        budget_seconds: 20,
        max_length: None,
    },
    Criterion {
        name: "Morita unit",
        runs: &[("morita-unit", &["A1"], Some(2)), ("morita-unit", &["A2"], Some(4))],
        budget_seconds: 120,
        max_length: None,
    },
    Criterion {
        name: "module extension criterion",
        runs: &[("module", &["A1", "A2"], Some(6))],
        budget_seconds: 30,
        max_length: None,
    },
];

fn run(c: &Criterion) -> (bool, String) {
    let start = Instant::now();
    let mut reports: Vec<SuiteReport> = Vec::new();
    for (suite, types, max_degree) in c.runs {
        let opts = SuiteOptions {
            types: Some(types.iter().map(|t| t.to_string()).collect()),
            max_length: c.max_length,
            max_degree: *max_degree,
            budget: Duration::from_secs(c.budget_seconds),
            ..SuiteOptions::default()
        };
        match run_suite(suite, &opts) {
            Ok(r) => reports.extend(r),
            Err(e) => return (false, format!("error: {e}")),
        }
    }
    let elapsed = start.elapsed();
    let in_budget = elapsed <= Duration::from_secs(c.budget_seconds);
    let passed = in_budget && reports.iter().all(SuiteReport::passed);
    let mut detail = String::new();
    if !passed {
        detail = report_text(&reports);
        if !in_budget {
            detail.push_str(&format!("\nover budget: {:.1}s", elapsed.as_secs_f64()));
        }
    }
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    let summary = format!("{cases} cases, {:.2}s of {}s", elapsed.as_secs_f64(), c.budget_seconds);
    (passed, if detail.is_empty() { summary } else { format!("{summary}\n{detail}") })
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let (passed, detail) = run(c);
        let mut lines = detail.lines();
        let verdict = if passed { "PASS" } else { "FAIL" };
        println!("{verdict} {}: {}", c.name, lines.next().unwrap_or(""));
        for line in lines {
            println!("     {line}");
        }
        if !passed {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

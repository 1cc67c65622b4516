//! Acceptance runner: one pass/fail line per criterion.
//!
//! Exits nonzero when a check fails outside `KNOWN_FALSE`, or when a check listed there passes.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use coxbraid::braid::{normal_form, power_normal_form, BraidWord};
use coxbraid::cli::fixtures::run_fixtures;
use coxbraid::cli::suites::{run_suite, Check, SuiteOptions};
use coxbraid::coxeter::GroupElement;

/// Literal statements that fail on exhaustive data.
const KNOWN_FALSE: [(&str, &str); 5] = [
    ("dominance-chain", "ord·ℓ(O^dom_min) ≥ |R| − ℓ_f, equal iff quasiregular"),
    ("theorem", "quasiregular and minimally dominant imply the power identity"),
    ("theorem", "the power identity implies quasiregular"),
    ("theorem", "power identity iff quasiregular of minimal dominant length"),
    ("theorem", "minimal length: trivial or elliptic iff convex iff firmly convex with the braid equation"),
];

struct Line {
    passed: bool,
    unexpected: bool,
    notes: Vec<String>,
}

fn report(n: usize, title: &str, elapsed: Duration, limit: Duration, line: &Line) {
    let timely = elapsed <= limit;
    let verdict = if line.passed && timely { "PASS" } else { "FAIL" };
    println!("criterion {n}: {verdict}  {title}  ({:.1} s, limit {} s)", elapsed.as_secs_f64(), limit.as_secs());
    if !timely {
        println!("    over the time limit");
    }
    for note in &line.notes {
        println!("    {note}");
    }
}

fn failing(checks: &[Check]) -> Vec<&Check> {
    checks.iter().filter(|c| !c.passed()).collect()
}

fn criterion_fixtures() -> Line {
    let tally = run_fixtures();
    let bad = failing(&tally.checks);
    let mut notes = vec![format!("{} fixtures", tally.checks.len())];
    notes.extend(bad.iter().map(|c| format!("failed: {}", c.name)));
    Line { passed: bad.is_empty(), unexpected: !bad.is_empty(), notes }
}

fn criterion_suites() -> Line {
    let mut line = Line { passed: true, unexpected: false, notes: Vec::new() };
    let suites = [
        ("dominance-chain", 4),
        ("involutions", 4),
        ("dg-bound", 4),
        ("theorem", 4),
        ("braiding-dgn", 4),
    ];
    for (suite, cap) in suites {
        let start = Instant::now();
        let r = run_suite(suite, &SuiteOptions { types: None, max_rank: Some(cap) }).expect("known suite");
        let cases: usize = r.checks.iter().map(|c| c.cases).sum();
        let secs = start.elapsed().as_secs_f64();
        line.notes.push(format!(
            "{suite} (rank ≤ {cap}, {} checks, {cases} cases, {secs:.1} s): {}",
            r.checks.len(),
            if r.passed { "pass" } else { "fail" }
        ));
        if secs > 300.0 {
            line.passed = false;
            line.unexpected = true;
        }
        let failed: HashSet<&str> = failing(&r.checks).iter().map(|c| c.name.as_str()).collect();
        for c in failing(&r.checks) {
            line.passed = false;
            let known = KNOWN_FALSE.contains(&(suite, c.name.as_str()));
            line.unexpected |= !known;
            let tag = if known { "documented counterexamples to" } else { "UNEXPECTED failure of" };
            let sample: Vec<&str> = c.counterexamples.iter().take(3).map(String::as_str).collect();
            line.notes.push(format!("  {tag} \"{}\": {} of {} cases, e.g. {}", c.name, c.failures, c.cases, sample.join("; ")));
        }
        for (s, name) in KNOWN_FALSE {
            if s == suite && !failed.contains(name) {
                line.unexpected = true;
                line.notes.push(format!("  documented failure no longer reproduced: \"{name}\""));
            }
        }
    }
    line
}

fn criterion_oracles() -> Line {
    let runs = [
        ("greedy normal form vs factorization search", normal_form_oracle(&NORMAL_FORM_TYPES)),
        ("cone feasibility vs Fourier–Motzkin", cone_oracle(300)),
        ("shift closure vs literal all-τ steps", shift_oracle(&SHIFT_TYPES)),
        ("inversion-sequence sets under braid moves", inversion_oracle(&INVERSION_TYPES)),
    ];
    let mut line = Line { passed: true, unexpected: false, notes: Vec::new() };
    for (name, run) in runs {
        line.passed &= run.passed();
        line.notes.push(format!("{name}: {} cases, {} failures", run.cases, run.failures.len()));
        line.notes.extend(run.failures.iter().take(3).map(|f| format!("  {f}")));
    }
    line.unexpected = !line.passed;
    line
}

/// Every untwisted element of length at most `max` by breadth-first search.
fn short_elements(t: &str, max: usize) -> Vec<GroupElement> {
    let r = rs(t);
    let e = GroupElement::identity(&r);
    let mut seen = BTreeSet::from([e.clone()]);
    let mut layer = vec![e];
    for _ in 0..max {
        let mut next = Vec::new();
        for x in &layer {
            for s in 0..r.rank() {
                let y = x.mul_simple_right(&r, s);
                if y.length() == x.length() + 1 && seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    seen.into_iter().collect()
}

fn criterion_scale() -> Line {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_coxbraid"))
        .args(["--format", "json", "classify", "--type", "D", "--rank", "6"])
        .output()
        .expect("binary runs");
    let classify_secs = start.elapsed().as_secs_f64();
    let classes = serde_json::from_slice::<serde_json::Value>(&out.stdout)
        .ok()
        .and_then(|v| v["result"].as_array().map(Vec::len))
        .unwrap_or(0);
    let start = Instant::now();
    let e6 = rs("E6");
    let elements = short_elements("E6", 12);
    let mut agree = 0usize;
    for w in &elements {
        let b = BraidWord::from_element(&e6, w);
        let full = (0..20).fold(BraidWord::identity(), |acc, _| acc.product(&e6, &b));
        agree += (power_normal_form(&e6, w, 20) == normal_form(&e6, &full)) as usize;
    }
    let ok = out.status.success() && classes == 37 && agree == elements.len();
    Line {
        passed: ok,
        unexpected: !ok,
        notes: vec![
            format!("`classify --type D --rank 6`: {classes} classes in {classify_secs:.1} s"),
            format!(
                "E6 normal forms of b_w^20 for all {} elements with ℓ(w) ≤ 12 in {:.1} s ({agree} agree with the product's normal form)",
                elements.len(),
                start.elapsed().as_secs_f64()
            ),
        ],
    }
}

/// Title, time limit in seconds and runner of one criterion.
type Criterion = (&'static str, u64, fn() -> Line);

fn main() {
    let mut unexpected = false;
    let criteria: [Criterion; 4] = [
        ("fixture suite", 10, criterion_fixtures),
        ("exhaustive suites", 5 * 300, criterion_suites),
        ("oracle suites", 60, criterion_oracles),
        ("scale check", 300, criterion_scale),
    ];
    for (n, (title, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let line = run();
        let elapsed = start.elapsed();
        report(n + 1, title, elapsed, Duration::from_secs(limit), &line);
        unexpected |= line.unexpected || elapsed > Duration::from_secs(limit);
    }
    if unexpected {
        std::process::exit(1);
    }
}

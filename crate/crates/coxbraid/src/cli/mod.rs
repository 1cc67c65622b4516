//! Command-line surface: element queries, class tables, normal forms of powers and verification suites.

pub mod fixtures;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::braid::{BraidError, BraidWord};
use crate::coxeter::{parse_word, GroupElement, GroupError, WordError};
use crate::rootsystem::{RootSystem, TypeError};

use report::{ClassReport, DgnReport, ElementReport};
use suites::{SuiteError, SuiteOptions, SuiteReport};

/// Version of the JSON output layout.
pub const SCHEMA: &str = "1";

/// Largest rank `classify` accepts without `--max-rank`.
pub const CLASSIFY_RANK_CAP: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "coxbraid", version, about = "Twisted finite Coxeter groups and normal forms of braid powers")]
pub struct Cli {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inversion data, convexity, eigenvalues and dominance of one element.
    Element(ElementArgs),
    /// Deligne-Garside normal form of a power of a positive braid.
    Dgn(DgnArgs),
    /// One row per conjugacy class (or parabolic orbit) of a coset.
    Classify(ClassifyArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// Cartan type such as B3, A2xA1, I2(5), or a family letter together with --rank.
    #[arg(long = "type")]
    pub ty: String,
    /// Rank appended to a bare family letter.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ElementArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// 1-based simple reflections read left to right, optionally prefixed by a twist such as "d1:".
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub word: String,
    /// Twist index such as d1.
    #[arg(long)]
    pub twist: Option<String>,
}

#[derive(Args, Debug)]
pub struct DgnArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Factors separated by "|", e.g. "d1: 1 2 | 2 1".
    #[arg(long, default_value = "")]
    pub word: String,
    #[arg(long)]
    pub twist: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub power: usize,
    /// Also print the left-greedy normal form.
    #[arg(long)]
    pub left: bool,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Coset δW̃ to classify, e.g. d1.
    #[arg(long)]
    pub twist: Option<String>,
    /// 1-based simple reflections generating the conjugating parabolic subgroup, e.g. "1,3".
    #[arg(long)]
    pub parabolic: Option<String>,
    /// Largest rank accepted.
    #[arg(long, default_value_t = CLASSIFY_RANK_CAP)]
    pub max_rank: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of normal-form, dg-bound, dominance-chain, involutions, shifts, braiding-dgn, theorem, fixtures.
    #[arg(long)]
    pub suite: String,
    /// Comma-separated types; every small type within the rank cap when omitted.
    #[arg(long = "type")]
    pub ty: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Largest rank accepted.
    #[arg(long)]
    pub max_rank: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

/// Rendered output and whether a verification passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    command: &'a str,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    ty: Option<&'a str>,
    result: &'a T,
}

fn json<T: Serialize>(command: &str, ty: Option<&str>, result: &T) -> String {
    let env = Envelope { schema: SCHEMA, command, ty, result };
    serde_json::to_string_pretty(&env).expect("reports serialise") + "\n"
}

fn type_name(t: &TypeArgs) -> Result<String, CliError> {
    match t.rank {
        None => Ok(t.ty.clone()),
        Some(r) if t.ty.chars().all(|c| c.is_ascii_alphabetic()) => Ok(format!("{}{r}", t.ty)),
        Some(_) => Err(CliError::Usage(format!("--rank needs a bare family letter, got `{}`", t.ty))),
    }
}

fn root_system(t: &TypeArgs) -> Result<(String, Arc<RootSystem>), CliError> {
    let name = type_name(t)?;
    let rs = RootSystem::from_str(&name)?;
    Ok((name, rs))
}

/// Parses "d1", "1" or "0" into a twist index of `rs`.
pub fn parse_twist(rs: &RootSystem, text: &str) -> Result<usize, CliError> {
    let digits = text.trim().trim_start_matches(['d', 'D']);
    let t: usize = digits.parse().map_err(|_| CliError::Usage(format!("cannot parse twist `{text}`")))?;
    if t >= rs.twist_count() {
        return Err(CliError::Usage(format!("twist d{t} does not exist; this type has {} twists", rs.twist_count())));
    }
    Ok(t)
}

fn merge_twist(rs: &RootSystem, from_word: usize, flag: &Option<String>) -> Result<usize, CliError> {
    match flag {
        None => Ok(from_word),
        Some(f) => {
            let t = parse_twist(rs, f)?;
            if from_word != 0 && from_word != t {
                return Err(CliError::Usage(format!("--twist d{t} conflicts with the word's prefix d{from_word}")));
            }
            Ok(t)
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row(fields: &[String]) -> String {
    fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",") + "\n"
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(String::new, T::to_string)
}

fn word_or_e(w: &str) -> &str {
    if w.is_empty() {
        "e"
    } else {
        w
    }
}

/// Columns of `element --format csv`.
pub const ELEMENT_COLUMNS: [&str; 16] = [
    "word",
    "twist",
    "length",
    "order",
    "fixed_count",
    "convex",
    "firmly_convex",
    "power_bound",
    "involution",
    "elliptic",
    "dominant",
    "quasiregular",
    "regular",
    "braid_equation",
    "witness",
    "bound",
];

fn render_element(format: Format, ty: &str, r: &ElementReport) -> String {
    match format {
        Format::Json => json("element", Some(ty), r),
        Format::Csv => {
            let row = [
                r.word.clone(),
                r.twist.to_string(),
                r.length.to_string(),
                r.order.to_string(),
                r.fixed_count.to_string(),
                r.convex.to_string(),
                r.firmly_convex.to_string(),
                opt(&r.power_bound),
                r.involution.to_string(),
                r.elliptic.to_string(),
                r.dominant.to_string(),
                r.quasiregular.to_string(),
                r.regular.to_string(),
                r.braid_equation.satisfied.to_string(),
                opt(&r.braid_equation.witness),
                r.braid_equation.bound.to_string(),
            ];
            csv_row(&ELEMENT_COLUMNS.map(String::from)) + &csv_row(&row)
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "element      {ty} [{}]", word_or_e(&r.word));
            let _ = writeln!(s, "length       {}", r.length);
            let _ = writeln!(s, "order        {}", r.order);
            let _ = writeln!(s, "inversions   {}", r.inversions.join(" "));
            let _ = writeln!(s, "fixed        {}", r.fixed.join(" "));
            let _ = writeln!(s, "stable       {}", r.stable.join(" "));
            let _ = writeln!(s, "ℓ_f          {}", r.fixed_count);
            let _ = writeln!(s, "convex       {}", r.convex);
            let _ = writeln!(s, "firmly       {}", r.firmly_convex);
            let _ = writeln!(s, "pb(w)        {}", r.power_bound.as_deref().map_or("-", word_or_e));
            let _ = writeln!(s, "involution   {}", r.involution);
            let _ = writeln!(s, "elliptic     {}", r.elliptic);
            let eig: Vec<String> = r.eigenvalues.iter().map(|e| format!("θ={} (dim {})", e.theta, e.dimension)).collect();
            let _ = writeln!(s, "eigenvalues  {}", eig.join(", "));
            let _ = writeln!(s, "dominant     {}", r.dominant);
            let _ = writeln!(s, "quasiregular {}", r.quasiregular);
            let _ = writeln!(s, "regular      {}", r.regular);
            let eq = &r.braid_equation;
            let _ = writeln!(
                s,
                "braid eq.    {} (least d: {}, bound {})",
                eq.satisfied,
                eq.witness.map_or("-".into(), |d| d.to_string()),
                eq.bound
            );
            s
        }
    }
}

fn render_dgn(format: Format, ty: &str, r: &DgnReport) -> String {
    match format {
        Format::Json => json("dgn", Some(ty), r),
        Format::Csv => {
            let mut s = csv_row(&["form", "index", "word", "length"].map(String::from));
            for (name, list) in [("right", Some(&r.factors)), ("left", r.left_factors.as_ref())] {
                for (i, f) in list.into_iter().flatten().enumerate() {
                    s += &csv_row(&[name.into(), (i + 1).to_string(), f.word.clone(), f.length.to_string()]);
                }
            }
            s
        }
        Format::Text => {
            let show = |fs: &[report::FactorReport]| {
                let body: Vec<String> = fs.iter().map(|f| f.word.replace(' ', "")).collect();
                let prefix = if r.twist == 0 { String::new() } else { format!("d{}: ", r.twist) };
                if body.is_empty() {
                    format!("{prefix}e")
                } else {
                    format!("{prefix}{}", body.join(" | "))
                }
            };
            let mut s = String::new();
            let _ = writeln!(s, "DGN(({})^{}) in {ty}", r.input, r.power);
            let _ = writeln!(s, "right  {}", show(&r.factors));
            let lens: Vec<String> = r.factors.iter().map(|f| f.length.to_string()).collect();
            let _ = writeln!(s, "lengths {} (total {})", lens.join(" "), r.length);
            if let Some(l) = &r.left_factors {
                let _ = writeln!(s, "left   {}", show(l));
            }
            s
        }
    }
}

/// Columns of `classify --format csv`, one row per length layer.
pub const CLASSIFY_COLUMNS: [&str; 18] = [
    "representative",
    "twist",
    "size",
    "min_length",
    "max_length",
    "dominant_min_length",
    "dominant_max_length",
    "fixed_count",
    "order",
    "elliptic",
    "quasiregular",
    "layer_length",
    "layer_count",
    "convex",
    "firmly_convex",
    "dominant",
    "braid_equation",
    "max_witness",
];

fn render_classify(format: Format, ty: &str, reports: &[ClassReport]) -> String {
    match format {
        Format::Json => json("classify", Some(ty), &reports),
        Format::Csv => {
            let mut s = csv_row(&CLASSIFY_COLUMNS.map(String::from));
            for c in reports {
                for l in &c.layers {
                    s += &csv_row(&[
                        c.representative.clone(),
                        c.twist.to_string(),
                        c.size.to_string(),
                        c.min_length.to_string(),
                        c.max_length.to_string(),
                        opt(&c.dominant_min_length),
                        opt(&c.dominant_max_length),
                        c.fixed_count.to_string(),
                        c.order.to_string(),
                        c.elliptic.to_string(),
                        c.quasiregular.to_string(),
                        l.length.to_string(),
                        l.count.to_string(),
                        l.convex.to_string(),
                        l.firmly_convex.to_string(),
                        l.dominant.to_string(),
                        l.braid_equation.to_string(),
                        opt(&l.max_witness),
                    ]);
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{} classes in {ty}", reports.len());
            let _ = writeln!(
                s,
                "{:<28} {:>6} {:>5} {:>5} {:>7} {:>7} {:>4} {:>4} {:>4} {:>4}",
                "representative", "size", "min", "max", "dommin", "dommax", "ℓ_f", "ord", "ell", "qreg"
            );
            for c in reports {
                let rep = word_or_e(&c.representative);
                let _ = writeln!(
                    s,
                    "{:<28} {:>6} {:>5} {:>5} {:>7} {:>7} {:>4} {:>4} {:>4} {:>4}",
                    rep,
                    c.size,
                    c.min_length,
                    c.max_length,
                    opt(&c.dominant_min_length),
                    opt(&c.dominant_max_length),
                    c.fixed_count,
                    c.order,
                    if c.elliptic { "y" } else { "n" },
                    if c.quasiregular { "y" } else { "n" },
                );
            }
            s
        }
    }
}

fn render_verify(format: Format, r: &SuiteReport) -> String {
    match format {
        Format::Json => json("verify", None, r),
        Format::Csv => {
            let mut s = csv_row(&["suite", "check", "cases", "failures", "passed", "first_counterexample"].map(String::from));
            for c in &r.checks {
                s += &csv_row(&[
                    r.suite.clone(),
                    c.name.clone(),
                    c.cases.to_string(),
                    c.failures.to_string(),
                    c.passed().to_string(),
                    c.counterexamples.first().cloned().unwrap_or_default(),
                ]);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let over = if r.types.is_empty() { String::new() } else { format!(" over {}", r.types.join(" ")) };
            let _ = writeln!(s, "suite {}{over}: {}", r.suite, if r.passed { "PASS" } else { "FAIL" });
            for c in &r.checks {
                if c.passed() {
                    let _ = writeln!(s, "  ok    {} ({} cases)", c.name, c.cases);
                } else {
                    let _ = writeln!(s, "  FAIL  {} ({} of {} cases)", c.name, c.failures, c.cases);
                    for x in &c.counterexamples {
                        let _ = writeln!(s, "          {x}");
                    }
                }
            }
            s
        }
    }
}

fn cmd_element(a: &ElementArgs, format: Format) -> Result<Outcome, CliError> {
    let (name, rs) = root_system(&a.ty)?;
    let (t, letters) = parse_word(rs.rank(), &a.word)?;
    let twist = merge_twist(&rs, t, &a.twist)?;
    let w = GroupElement::from_word(&rs, twist, &letters)?;
    let r = report::element_report(&rs, &w);
    Ok(Outcome { text: render_element(format, &name, &r), passed: true })
}

fn cmd_dgn(a: &DgnArgs, format: Format) -> Result<Outcome, CliError> {
    let (name, rs) = root_system(&a.ty)?;
    let mut b = BraidWord::parse(&rs, &a.word)?;
    b.twist = merge_twist(&rs, b.twist, &a.twist)?;
    let r = report::dgn_report(&rs, &b, a.power, a.left);
    Ok(Outcome { text: render_dgn(format, &name, &r), passed: true })
}

fn cmd_classify(a: &ClassifyArgs, format: Format) -> Result<Outcome, CliError> {
    let (name, rs) = root_system(&a.ty)?;
    if rs.rank() > a.max_rank {
        return Err(CliError::Usage(format!("{name} has rank {}, above the cap {}; raise --max-rank", rs.rank(), a.max_rank)));
    }
    let twist = match &a.twist {
        Some(t) => parse_twist(&rs, t)?,
        None => 0,
    };
    let j = match &a.parabolic {
        Some(p) => report::parse_parabolic(rs.rank(), p).map_err(CliError::Usage)?,
        None => rs.full_index(),
    };
    let reports = report::classify(&rs, twist, j, usize::MAX)?;
    Ok(Outcome { text: render_classify(format, &name, &reports), passed: true })
}

fn cmd_verify(a: &VerifyArgs, format: Format) -> Result<Outcome, CliError> {
    let types = match &a.ty {
        None => None,
        Some(list) => Some(
            list.split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| type_name(&TypeArgs { ty: t.trim().to_string(), rank: a.rank }))
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    let opts = SuiteOptions { types, max_rank: a.max_rank };
    let r = suites::run_suite(&a.suite, &opts)?;
    Ok(Outcome { text: render_verify(format, &r), passed: r.passed })
}

/// Runs a parsed command on a pool of `cli.jobs` threads.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} worker threads: {e}", cli.jobs)))?;
    pool.install(|| match &cli.command {
        Command::Element(a) => cmd_element(a, cli.format),
        Command::Dgn(a) => cmd_dgn(a, cli.format),
        Command::Classify(a) => cmd_classify(a, cli.format),
        Command::Verify(a) => cmd_verify(a, cli.format),
    })
}

/// Parses arguments, runs the command and returns the process exit code (0 pass, 1 fail, 2 usage).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &outcome.text),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {}", CliError::Io(e));
                return 2;
            }
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

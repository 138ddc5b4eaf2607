//! Command-line front end: `analyze`, `table`, `classify` and `verify`.

mod doc;
pub mod render;

use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arf;
use crate::config::{Limits, DEFAULT_MU_CAP, HORIZON_CAP_ENV};
use crate::error::{Error, Result};
use crate::exactmath::parse_rational;
use crate::generators::GeneratorSet;
use crate::identities;
use crate::psemigroup::PSemigroup;

pub use doc::{Field, Style};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_CAP: i32 = 4;
pub const EXIT_VERIFY_FAILED: i32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(
    name = "pnsg",
    version,
    about = "Exact invariants of p-numerical semigroups"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Print sets as arrays instead of run-length strings.
    #[arg(long, global = true)]
    pub expand: bool,

    /// Hard cap on denumerant table entries.
    #[arg(long, global = true, env = HORIZON_CAP_ENV)]
    pub horizon_cap: Option<usize>,

    /// Largest allowed power-sum exponent.
    #[arg(long, global = true, default_value_t = DEFAULT_MU_CAP)]
    pub mu_cap: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GensArg {
    /// Comma-separated generators, e.g. 4,5,6.
    #[arg(long, value_delimiter = ',', required = true)]
    pub gens: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[command(flatten)]
    pub gens: GensArg,

    /// A single p or an inclusive range `lo..hi`.
    #[arg(long, value_parser = parse_range)]
    pub p: RangeInclusive<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every invariant of one S_p(A).
    Analyze {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long)]
        p: u64,
        /// Report gap power sums for exponents 0..=mu.
        #[arg(long, default_value_t = 2)]
        mu: u32,
        /// Also report the gap sum of lambda^n n^mu (rational `num/den`).
        #[arg(long)]
        lambda: Option<String>,
    },
    /// One row per p with the requested fields.
    Table {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "frobenius")]
        field: Vec<Field>,
    },
    /// Symmetry flags for each p.
    Classify {
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Run a verifier.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Debug, Args)]
pub struct ScalingArgs {
    #[arg(long)]
    pub alpha: u64,
    #[arg(long)]
    pub beta: u64,
    #[command(flatten)]
    pub range: RangeArgs,
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// g and n of {alpha} ∪ beta·B against {alpha} ∪ B.
    Johnson(ScalingArgs),
    /// Symmetry of {alpha} ∪ beta·B against {alpha} ∪ B.
    Watanabe(ScalingArgs),
    /// Scaling by the gcd of all generators after the first.
    GcdScaling(RangeArgs),
    /// Five characterizations of p-symmetry agree.
    Symmetry(RangeArgs),
    /// Residue-indexed Apéry pairings agree with the classification.
    Pairings(RangeArgs),
    /// Pseudo-Frobenius consequences of (pseudo-)symmetry.
    Pf(RangeArgs),
    /// Three characterizations of almost symmetry agree.
    Almost(RangeArgs),
    /// Named shapes are almost symmetric.
    Pattern(RangeArgs),
    /// Arf test plus the residue-1 / residue-(a-1) constraints.
    Arf(RangeArgs),
    /// Genus, Sylvester sum and power sums by enumeration and by formula.
    Formulas {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, default_value_t = 3)]
        mu: u32,
    },
    /// 2n = g + t implies almost symmetric (p = 0).
    Nari(GensArg),
    /// S_p(a, b) is Arf for p <= p_max when <a, b> is.
    Prop4 {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long)]
        p_max: u64,
    },
    /// Generator reduction for a^k, a^k+1, a^k+a, ..., a^k+a^(k-1).
    Reduction {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = parse_range)]
        p: RangeInclusive<u64>,
    },
    /// Eulerian-number generating function, truncated at k_max.
    EulerianGf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k_max: usize,
    },
}

/// `5`, `0..10` or `0..=10`; both ends inclusive.
pub fn parse_range(text: &str) -> std::result::Result<RangeInclusive<u64>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("`{t}` is not a non-negative integer"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = num(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::HorizonCapExceeded { .. } | Error::PowerCapExceeded { .. } => EXIT_CAP,
        Error::Inconsistent(_) => EXIT_VERIFY_FAILED,
        _ => EXIT_PRECONDITION,
    }
}

/// Result of a command: the document and whether every verdict passed.
pub struct Outcome {
    pub doc: Value,
    pub passed: bool,
}

fn over_range<F>(range: &RangeInclusive<u64>, f: F) -> Result<Vec<Value>>
where
    F: Fn(u64) -> Result<Value> + Sync,
{
    let ps: Vec<u64> = range.clone().collect();
    ps.into_par_iter()
        .map(&f)
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

fn all_passed(values: &[Value]) -> bool {
    values.iter().all(|v| v["passed"].as_bool().unwrap_or(true))
}

fn results(name: &str, gens: Option<&GeneratorSet>, results: Vec<Value>) -> Outcome {
    let passed = all_passed(&results);
    let mut doc = json!({"name": name, "passed": passed, "results": results});
    if let Some(g) = gens {
        doc["generators"] = json!(g.as_input());
    }
    Outcome { doc, passed }
}

fn per_p<F>(name: &str, args: &RangeArgs, limits: &Limits, f: F) -> Result<Outcome>
where
    F: Fn(&PSemigroup) -> Result<Value> + Sync,
{
    let gens = GeneratorSet::new(&args.gens.gens)?;
    let values = over_range(&args.p, |p| f(&PSemigroup::build_with(&gens, p, limits)?))?;
    Ok(results(name, Some(&gens), values))
}

/// Executes a parsed command.
pub fn execute(cli: &Cli, limits: &Limits) -> Result<Outcome> {
    let style = Style { expand: cli.expand };
    match &cli.command {
        Command::Analyze {
            gens,
            p,
            mu,
            lambda,
        } => {
            let gens = GeneratorSet::new(&gens.gens)?;
            let weighted = lambda
                .as_deref()
                .map(|l| {
                    Ok::<_, Error>(doc::Weighted {
                        lambda: parse_rational(l)?,
                        mu: *mu,
                    })
                })
                .transpose()?;
            let sp = PSemigroup::build_with(&gens, *p, limits)?;
            let doc = doc::analyze(&sp, *mu, weighted.as_ref(), style)?;
            Ok(Outcome { doc, passed: true })
        }
        Command::Table { range, field } => {
            let gens = GeneratorSet::new(&range.gens.gens)?;
            let rows = over_range(&range.p, |p| {
                doc::table_row(&PSemigroup::build_with(&gens, p, limits)?, field)
            })?;
            Ok(Outcome {
                doc: json!({"generators": gens.as_input(), "rows": rows}),
                passed: true,
            })
        }
        Command::Classify { range } => {
            let gens = GeneratorSet::new(&range.gens.gens)?;
            let rows = over_range(&range.p, |p| {
                Ok(doc::classify_row(&PSemigroup::build_with(
                    &gens, p, limits,
                )?))
            })?;
            Ok(Outcome {
                doc: json!({"generators": gens.as_input(), "rows": rows}),
                passed: true,
            })
        }
        Command::Verify(v) => verify(v, limits, style),
    }
}

type ScalingCheck = fn(u64, u64, &GeneratorSet, u64) -> Result<identities::IdentityReport>;

fn verify(v: &Verify, limits: &Limits, style: Style) -> Result<Outcome> {
    match v {
        Verify::Johnson(a) | Verify::Watanabe(a) => {
            let base = GeneratorSet::new(&a.range.gens.gens)?;
            let (name, f): (&str, ScalingCheck) = match v {
                Verify::Johnson(_) => ("johnson", identities::verify_johnson),
                _ => ("watanabe", identities::verify_watanabe),
            };
            let values = over_range(&a.range.p, |p| {
                Ok(doc::identity(&f(a.alpha, a.beta, &base, p)?, style))
            })?;
            Ok(results(name, Some(&base), values))
        }
        Verify::GcdScaling(r) => {
            let gens = GeneratorSet::new(&r.gens.gens)?;
            let values = over_range(&r.p, |p| {
                Ok(doc::identity(
                    &identities::verify_gcd_scaling(&gens, p)?,
                    style,
                ))
            })?;
            Ok(results("gcd-scaling", Some(&gens), values))
        }
        Verify::Symmetry(r) => per_p("symmetry", r, limits, |sp| {
            Ok(doc::symmetry_equivalences(sp))
        }),
        Verify::Pairings(r) => per_p("pairings", r, limits, |sp| Ok(doc::pairings(sp))),
        Verify::Pf(r) => per_p("pf", r, limits, |sp| Ok(doc::pf_consequences(sp, style))),
        Verify::Almost(r) => per_p("almost", r, limits, |sp| Ok(doc::almost(sp))),
        Verify::Pattern(r) => per_p("pattern", r, limits, |sp| Ok(doc::pattern(sp))),
        Verify::Arf(r) => per_p("arf", r, limits, |sp| Ok(doc::arf(sp))),
        Verify::Formulas { range, mu } => {
            per_p("formulas", range, limits, |sp| doc::formulas(sp, *mu))
        }
        Verify::Nari(g) => {
            let gens = GeneratorSet::new(&g.gens)?;
            let sp = PSemigroup::build_with(&gens, 0, limits)?;
            let value = doc::nari(&sp).expect("p = 0");
            Ok(results("nari", Some(&gens), vec![value]))
        }
        Verify::Prop4 { gens, p_max } => {
            if gens.gens.len() != 2 {
                return Err(Error::Precondition(
                    "prop4 takes exactly two generators".into(),
                ));
            }
            let report = arf::verify_prop4(gens.gens[0], gens.gens[1], *p_max)?;
            let value = doc::prop4(&report);
            let passed = report.passed();
            let mut doc = json!({"name": "prop4", "passed": passed, "results": [value]});
            doc["generators"] = json!(gens.gens);
            Ok(Outcome { doc, passed })
        }
        Verify::Reduction { a, k, p } => {
            let values = over_range(p, |p| {
                Ok(doc::identity(
                    &identities::reduction_remark(*a, *k, p)?,
                    style,
                ))
            })?;
            Ok(results("reduction", None, values))
        }
        Verify::EulerianGf { n, k_max } => {
            let value = doc::eulerian_gf(*n, *k_max)?;
            Ok(results("eulerian-gf", None, vec![value]))
        }
    }
}

pub fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => render::json(doc),
        Format::Tsv => render::tsv(doc),
        Format::Pretty => render::pretty(doc),
    }
}

/// Parses the process arguments, runs the command and returns the exit
/// status.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    run(&cli)
}

pub fn run(cli: &Cli) -> i32 {
    let mut limits = Limits::from_env().with_mu_cap(cli.mu_cap);
    if let Some(cap) = cli.horizon_cap {
        if cap == 0 {
            eprintln!("error: horizon cap must be positive");
            return EXIT_USAGE;
        }
        limits = limits.with_horizon_cap(cap);
        // Library entry points without an explicit limit read the variable.
        std::env::set_var(HORIZON_CAP_ENV, cap.to_string());
    }
    match execute(cli, &limits) {
        Ok(outcome) => {
            print!("{}", render(&outcome.doc, cli.format));
            if outcome.passed {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

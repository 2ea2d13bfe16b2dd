//! Command-line surface.
//!
//! Exit statuses: 0 success, 1 usage error (or failed validation), 2 the
//! request lies outside the formula's hypotheses, 3 numeric instability.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cache::{load_cache, render_cache, CacheError};
use crate::exact::Polynomial;
use crate::formulas::{
    bundle_count, degree_polynomial, degree_report, holla_vi_degree, quot_degree,
    verlinde_dimension, FormulaError, GenusPrime, DEFAULT_PRECISION, UNPROVEN_LABEL,
};
use crate::validate::validate_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "dormant", version, about = "Counts of dormant indigenous bundles and related enumerative numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Verb,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Working precision in bits for `vi`.
    #[arg(long, default_value_t = DEFAULT_PRECISION, global = true)]
    pub precision: usize,

    /// Evaluate the closed formulas even when p <= 2(g-1).
    #[arg(long, global = true)]
    pub allow_out_of_range: bool,

    /// Polynomial cache file (read and extended by `polynomial`).
    #[arg(long, global = true)]
    pub cache_path: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Generic number of dormant indigenous bundles.
    Degree {
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        prime: i64,
    },
    /// The count as a polynomial in p.
    Polynomial {
        #[arg(long)]
        genus: i64,
    },
    /// Verlinde dimension at level k.
    Verlinde {
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        level: u64,
    },
    /// Holla's root-of-unity degree of a zero-dimensional Quot scheme.
    Vi {
        /// Rank of the ambient bundle.
        #[arg(long)]
        rank: i64,
        /// Degree of the ambient bundle.
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        /// Rank of the subbundles.
        #[arg(long)]
        subrank: i64,
        #[arg(long)]
        genus: i64,
    },
    /// Number of maximally unstable Frobenius-destabilised bundles.
    BundleCount {
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        prime: i64,
    },
    /// Degree of the Quot scheme of the Frobenius pushforward.
    QuotDegree {
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        prime: i64,
    },
    /// Run the cross-validation sweep.
    Validate {
        #[arg(long, default_value_t = 10)]
        max_genus: i64,
        #[arg(long, default_value_t = 31)]
        max_prime: i64,
    },
}

/// What a command printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { status: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(status: i32, message: impl std::fmt::Display) -> Self {
        Outcome { status, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

fn formula_failure(e: FormulaError) -> Outcome {
    let status = match e {
        FormulaError::OutOfRange { .. } | FormulaError::SignExponent { .. } => EXIT_HYPOTHESIS,
        FormulaError::NumericInstability { .. } => EXIT_NUMERIC,
        FormulaError::Genus(_) | FormulaError::NotOddPrime(_) | FormulaError::QuotData(_) => EXIT_USAGE,
    };
    Outcome::fail(status, e)
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json");
    s.push('\n');
    s
}

fn genus_prime(cli: &Cli, genus: i64, prime: i64) -> Result<GenusPrime, Outcome> {
    GenusPrime::new(genus, prime)
        .map(|gp| gp.allow_out_of_range(cli.allow_out_of_range))
        .map_err(formula_failure)
}

fn range_note(gp: &GenusPrime) -> Option<&'static str> {
    (!gp.joshi_range()).then_some(UNPROVEN_LABEL)
}

/// Value-only verbs share this shape.
fn single_value(
    cli: &Cli,
    gp: &GenusPrime,
    key: &str,
    value: Result<crate::exact::Rational, FormulaError>,
) -> Outcome {
    let value = match value {
        Ok(v) => v,
        Err(e) => return formula_failure(e),
    };
    let note = range_note(gp);
    match cli.format {
        Format::Json => {
            let mut obj = json!({ "g": gp.genus(), "p": gp.prime(), key: value.to_string() });
            if let Some(n) = note {
                obj["range"] = Value::from(n);
            }
            Outcome::ok(to_json(&obj))
        }
        Format::Text => {
            let mut out = format!("{value}\n");
            if let Some(n) = note {
                let _ = writeln!(out, "note: {n}");
            }
            Outcome::ok(out)
        }
    }
}

fn cached_polynomial(path: &Path, genus: i64) -> Result<Polynomial, CacheError> {
    let mut polys: BTreeMap<i64, Polynomial> = if path.exists() {
        load_cache(path)?
    } else {
        BTreeMap::new()
    };
    if let Some(p) = polys.get(&genus) {
        return Ok(p.clone());
    }
    let top = polys.keys().copied().max().unwrap_or(2).max(genus);
    for g in 2..=top {
        polys
            .entry(g)
            .or_insert_with(|| degree_polynomial(g).expect("g >= 2"));
    }
    std::fs::write(path, render_cache(&polys)).map_err(|source| CacheError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(polys[&genus].clone())
}

pub fn run_command(cli: &Cli) -> Outcome {
    match &cli.command {
        Verb::Degree { genus, prime } => {
            let gp = match genus_prime(cli, *genus, *prime) {
                Ok(gp) => gp,
                Err(o) => return o,
            };
            let report = match degree_report(&gp) {
                Ok(r) => r,
                Err(e) => return formula_failure(e),
            };
            match cli.format {
                Format::Json => {
                    let mut value = serde_json::to_value(&report).expect("json");
                    if report.range.is_none() {
                        value.as_object_mut().expect("object").remove("range");
                    }
                    Outcome::ok(to_json(&value))
                }
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "g = {}, p = {}", report.g, report.p);
                    let _ = writeln!(out, "degree        = {}", report.degree);
                    let _ = writeln!(out, "quot_degree   = {}", report.quot_degree);
                    let _ = writeln!(out, "bundle_count  = {}", report.bundle_count);
                    let _ = writeln!(out, "verlinde_dim  = {}", report.verlinde_dim);
                    let _ = writeln!(out, "zeta_form     = {}", report.zeta_form);
                    let _ = writeln!(out, "polynomial    = {}", report.polynomial);
                    let passed = report.checks.iter().filter(|c| c.pass).count();
                    let _ = writeln!(out, "checks        = {passed}/{} pass", report.checks.len());
                    for c in report.checks.iter().filter(|c| !c.pass) {
                        let _ = writeln!(out, "  FAIL {}", c.name);
                    }
                    if let Some(n) = &report.range {
                        let _ = writeln!(out, "note: {n}");
                    }
                    Outcome::ok(out)
                }
            }
        }
        Verb::Polynomial { genus } => {
            let poly = match &cli.cache_path {
                Some(path) if *genus >= 2 => match cached_polynomial(path, *genus) {
                    Ok(p) => p,
                    Err(e) => return Outcome::fail(EXIT_USAGE, e),
                },
                _ => match degree_polynomial(*genus) {
                    Ok(p) => p,
                    Err(e) => return formula_failure(e),
                },
            };
            match cli.format {
                Format::Json => Outcome::ok(to_json(&json!({
                    "g": genus,
                    "polynomial": poly.to_string(),
                    "degree": poly.degree(),
                }))),
                Format::Text => Outcome::ok(format!("{poly}\n")),
            }
        }
        Verb::Verlinde { genus, level } => {
            let value = match verlinde_dimension(*genus, *level) {
                Ok(v) => v,
                Err(e) => return formula_failure(e),
            };
            match cli.format {
                Format::Json => Outcome::ok(to_json(&json!({
                    "g": genus,
                    "k": level,
                    "verlinde_dim": value.to_string(),
                }))),
                Format::Text => Outcome::ok(format!("{value}\n")),
            }
        }
        Verb::Vi { rank, degree, subrank, genus } => {
            match holla_vi_degree(*rank, *degree, *subrank, *genus, cli.precision) {
                Err(e) => formula_failure(e),
                Ok(v) => match cli.format {
                    Format::Json => Outcome::ok(to_json(&json!({
                        "n": rank,
                        "d": degree,
                        "r": subrank,
                        "g": genus,
                        "degree": v.nearest.to_string(),
                        "precision": v.precision,
                    }))),
                    Format::Text => Outcome::ok(format!(
                        "{} (integral at {} bits)\n",
                        v.nearest, v.precision
                    )),
                },
            }
        }
        Verb::BundleCount { genus, prime } => match genus_prime(cli, *genus, *prime) {
            Ok(gp) => single_value(cli, &gp, "bundle_count", bundle_count(&gp)),
            Err(o) => o,
        },
        Verb::QuotDegree { genus, prime } => match genus_prime(cli, *genus, *prime) {
            Ok(gp) => single_value(cli, &gp, "quot_degree", quot_degree(&gp)),
            Err(o) => o,
        },
        Verb::Validate { max_genus, max_prime } => {
            let outcome = validate_suite(*max_genus, *max_prime);
            let status = if outcome.passed() { EXIT_OK } else { EXIT_USAGE };
            let stdout = match cli.format {
                Format::Json => to_json(&serde_json::to_value(&outcome).expect("json")),
                Format::Text => {
                    let mut out = format!(
                        "{}: {} cases, {} failures, {} ms\n",
                        outcome.suite,
                        outcome.cases_run,
                        outcome.failures.len(),
                        outcome.wall_time.as_millis()
                    );
                    for f in &outcome.failures {
                        let _ = writeln!(out, "FAIL {}: expected {}, got {}", f.case, f.expected, f.got);
                    }
                    out
                }
            };
            Outcome { status, stdout, stderr: String::new() }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(&cli),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome { status: EXIT_USAGE, stdout: String::new(), stderr: text },
            }
        }
    }
}

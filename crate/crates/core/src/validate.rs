//! Cross-validation sweep over a `(g, p)` grid.
//!
//! Each grid cell is independent and runs on the rayon pool; per-genus
//! checks of the `V` polynomials run once per genus that has at least one
//! cell. Failures are collected as data.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::{zeta_sum_exact, zeta_sum_numeric};
use crate::exact::rational::factorial;
use crate::exact::{bernoulli_numbers, Rational};
use crate::formulas::{
    degree_polynomial, degree_report, frobenius_pushforward_profile, holla_vi_degree,
    GenusPrime, DEFAULT_PRECISION,
};
use crate::golden::{published_degree_polynomial, PUBLISHED_GENERA};
use crate::primes::odd_primes_between;
use crate::trig::{v_numeric, v_polynomial, v_polynomial_at_truncation};

/// Budget for a single grid cell.
pub const CELL_TIME_BUDGET: Duration = Duration::from_secs(1);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationOutcome {
    pub suite: String,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    #[serde(rename = "wall_time_ms", serialize_with = "as_millis")]
    pub wall_time: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl ValidationOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Cases {
    run: usize,
    failures: Vec<Failure>,
}

impl Cases {
    fn check(&mut self, case: String, pass: bool, expected: impl ToString, got: impl ToString) {
        self.run += 1;
        if !pass {
            self.failures.push(Failure {
                case,
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    fn merge(&mut self, other: Cases) {
        self.run += other.run;
        self.failures.extend(other.failures);
    }
}

fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn genus_cases(g: i64, max_prime: i64) -> Cases {
    let mut c = Cases::default();
    let n = (g - 1) as u32;
    let v = v_polynomial(n);
    let id = |what: &str| format!("g={g}/{what}");

    c.check(id("v_degree"), v.poly.degree() == Some(2 * n as usize), 2 * n, format!("{:?}", v.poly.degree()));
    c.check(id("v_even"), v.poly.is_even(), "even powers only", &v.poly);
    let at_one = v.evaluate(&Rational::one());
    c.check(id("v_vanishes_at_1"), at_one.is_zero(), 0, &at_one);

    let bern = bernoulli_numbers(2 * n as usize + 1);
    let sign = if n % 2 == 1 { Rational::one() } else { -Rational::one() };
    let lead = sign
        * Rational::from(2).pow(2 * n as i32)
        * bern.get(2 * n as usize).unwrap().clone()
        / Rational::from(factorial(2 * u64::from(n)));
    c.check(id("v_leading_coefficient"), v.poly.leading_coefficient() == lead, &lead, v.poly.leading_coefficient());

    let raised = v_polynomial_at_truncation(n, 2 * i64::from(n) + 6);
    c.check(id("v_truncation_stable"), raised == v, &v.poly, &raised.poly);

    for k in 2..=max_prime.max(2) {
        let exact = v.evaluate(&Rational::from(k)).to_f64();
        let numeric = v_numeric(n, k).expect("k >= 2");
        c.check(
            format!("g={g}/v_numeric/k={k}"),
            relative_gap(exact, numeric) <= 1e-8,
            numeric,
            exact,
        );
    }

    let dp = degree_polynomial(g).expect("g >= 2");
    c.check(id("polynomial_degree_3g-3"), dp.degree() == Some(3 * g as usize - 3), 3 * g - 3, format!("{:?}", dp.degree()));
    if PUBLISHED_GENERA.contains(&g) {
        let published = published_degree_polynomial(g).expect("in table");
        c.check(id("golden_table"), published == dp, &published, &dp);
    }
    c
}

fn cell_cases(g: i64, p: i64) -> Cases {
    let start = Instant::now();
    let mut c = Cases::default();
    let id = |what: &str| format!("g={g},p={p}/{what}");
    let gp = GenusPrime::new(g, p).expect("grid cells are valid");

    match degree_report(&gp) {
        Err(e) => c.check(id("report"), false, "report", e),
        Ok(report) => {
            for check in &report.checks {
                c.check(id(&check.name), check.pass, "pass", "fail");
            }
            let exact = zeta_sum_exact(g, p).expect("valid input");
            let sign = if (g - 1) % 2 == 0 { Rational::one() } else { -Rational::one() };
            let via_v = sign * v_polynomial((g - 1) as u32).evaluate(&Rational::from(p))
                / Rational::from(4).pow((g - 1) as i32);
            c.check(id("zeta_sum_sine_identity"), exact == via_v, &via_v, &exact);
            match zeta_sum_numeric(g, p) {
                Ok(x) => c.check(id("zeta_sum_numeric"), relative_gap(x, exact.to_f64()) <= 1e-8, &exact, x),
                Err(e) => c.check(id("zeta_sum_numeric"), false, &exact, e),
            }
            if g <= 3 && p <= 13 {
                let profile = frobenius_pushforward_profile(&gp).expect("in range");
                match holla_vi_degree(profile.n, profile.d, profile.r, g, DEFAULT_PRECISION) {
                    Ok(v) => {
                        let q = report.quot_degree.to_f64();
                        c.check(id("holla_matches_quot_degree"), relative_gap(v.value, q) <= 1e-6, &report.quot_degree, v.value);
                    }
                    Err(e) => c.check(id("holla_matches_quot_degree"), false, &report.quot_degree, e),
                }
            }
        }
    }
    let elapsed = start.elapsed();
    c.check(id("cell_time"), elapsed < CELL_TIME_BUDGET, format!("< {CELL_TIME_BUDGET:?}"), format!("{elapsed:?}"));
    c
}

/// Cells `(g, p)` with `2 <= g <= max_genus`, `p` an odd prime `<= max_prime`
/// and `p > 2(g-1)`.
pub fn grid(max_genus: i64, max_prime: i64) -> Vec<(i64, i64)> {
    (2..=max_genus)
        .flat_map(|g| {
            odd_primes_between(2 * (g - 1) + 1, max_prime)
                .into_iter()
                .map(move |p| (g, p))
        })
        .collect()
}

pub fn validate_suite(max_genus: i64, max_prime: i64) -> ValidationOutcome {
    let start = Instant::now();
    let cells = grid(max_genus, max_prime);
    let mut genera: Vec<i64> = cells.iter().map(|&(g, _)| g).collect();
    genera.dedup();

    let mut total = Cases::default();
    let per_genus: Vec<Cases> = genera.par_iter().map(|&g| genus_cases(g, max_prime)).collect();
    let per_cell: Vec<Cases> = cells.par_iter().map(|&(g, p)| cell_cases(g, p)).collect();
    for c in per_genus.into_iter().chain(per_cell) {
        total.merge(c);
    }
    ValidationOutcome {
        suite: format!("identity web g<={max_genus}, p<={max_prime}"),
        cases_run: total.run,
        failures: total.failures,
        wall_time: start.elapsed(),
    }
}

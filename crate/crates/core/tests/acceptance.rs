//! Acceptance gate: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use dormant_core::exact::{bernoulli_numbers, Indeterminate, LaurentSeries, Polynomial, Rational};
use dormant_core::exact::rational::factorial;
use dormant_core::formulas::{
    bundle_count, degree, degree_numeric, degree_polynomial, degree_report, degree_via_zeta,
    holla_vi_degree, quot_degree, verlinde_dimension, GenusPrime, DEFAULT_PRECISION,
};
use dormant_core::golden::published_degree_polynomial;
use dormant_core::primes::odd_primes_between;
use dormant_core::trig::{v_polynomial, v_polynomial_at_truncation};
use dormant_core::validate::grid;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn gp(g: i64, p: i64) -> GenusPrime {
    GenusPrime::new(g, p).expect("valid grid point")
}

fn within_budget(name: &str, start: Instant, budget: Duration, detail: String) -> Verdict {
    let elapsed = start.elapsed();
    if elapsed < budget {
        Ok(format!("{detail} in {elapsed:.2?} (< {budget:?})"))
    } else {
        Err(format!("{name} took {elapsed:.2?}, budget {budget:?}"))
    }
}

/// 1. Published polynomials for g = 2..10, exact.
fn golden_table() -> Verdict {
    let start = Instant::now();
    for g in 2..=10 {
        let published = published_degree_polynomial(g).ok_or(format!("no entry for g={g}"))?;
        let computed = degree_polynomial(g).map_err(|e| e.to_string())?;
        if published != computed {
            return Err(format!("g={g}: published {published}, computed {computed}"));
        }
    }
    within_budget("golden table", start, Duration::from_secs(1), "9 polynomials equal".into())
}

/// 2. degree(2, p) = (p³ - p)/24 for odd primes up to 97.
fn genus_two() -> Verdict {
    let start = Instant::now();
    let primes = odd_primes_between(3, 97);
    for &p in &primes {
        let expected = Rational::new(p * p * p - p, 24);
        let got = degree(&gp(2, p)).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("p={p}: expected {expected}, got {got}"));
        }
    }
    within_budget("genus two", start, Duration::from_secs(1), format!("{} primes", primes.len()))
}

/// 3. Residue path == trace path exactly; float sine sum within 1e-8.
fn three_paths() -> Verdict {
    let start = Instant::now();
    let cells = grid(8, 31);
    let mut worst = 0.0f64;
    for &(g, p) in &cells {
        let gp = gp(g, p);
        let residue = degree(&gp).map_err(|e| e.to_string())?;
        let trace = degree_via_zeta(&gp).map_err(|e| e.to_string())?;
        if residue != trace {
            return Err(format!("({g},{p}): residue {residue} != trace {trace}"));
        }
        let float = degree_numeric(g, p);
        let rel = (float - residue.to_f64()).abs() / residue.to_f64();
        worst = worst.max(rel);
        if rel > 1e-8 {
            return Err(format!("({g},{p}): float {float} vs {residue}, rel {rel:e}"));
        }
    }
    within_budget(
        "three paths",
        start,
        Duration::from_secs(5),
        format!("{} cells, worst float rel {worst:.1e}", cells.len()),
    )
}

/// 4. Quot, bundle-count and Verlinde relations, exact.
fn relation_web() -> Verdict {
    let cells = grid(8, 31);
    for &(g, p) in &cells {
        let gp = gp(g, p);
        let d = degree(&gp).map_err(|e| e.to_string())?;
        let pr = Rational::from(p);
        let q = quot_degree(&gp).map_err(|e| e.to_string())?;
        if q != pr.pow(g as i32) * &d {
            return Err(format!("({g},{p}): quot_degree {q} != p^g·{d}"));
        }
        let b = bundle_count(&gp).map_err(|e| e.to_string())?;
        if b != Rational::from(2).pow(2 * g as i32) * &d {
            return Err(format!("({g},{p}): bundle_count {b} != 2^2g·{d}"));
        }
        let v = verlinde_dimension(g, (p - 2) as u64).map_err(|e| e.to_string())?;
        if &v / &Rational::from(2).pow(g as i32) != d {
            return Err(format!("({g},{p}): verlinde {v}/2^g != {d}"));
        }
    }
    Ok(format!("{} cells x 3 relations", cells.len()))
}

/// 5. degree is a positive integer for g <= 10, p <= 97, p > 2(g-1).
fn integrality() -> Verdict {
    let cells = grid(10, 97);
    for &(g, p) in &cells {
        let d = degree(&gp(g, p)).map_err(|e| e.to_string())?;
        if !(d.is_integer() && d.is_positive()) {
            return Err(format!("({g},{p}): degree {d}"));
        }
    }
    Ok(format!("{} cells", cells.len()))
}

/// 6. Holla's sum on the Frobenius profile equals quot_degree.
fn holla_specialisation() -> Verdict {
    let start = Instant::now();
    let cases = [(2, 3), (2, 5), (2, 7), (2, 11), (2, 13), (3, 5), (3, 7), (3, 11)];
    for (g, p) in cases {
        let v = holla_vi_degree(p, (p - 2) * (g - 1), 2, g, DEFAULT_PRECISION)
            .map_err(|e| format!("({g},{p}): {e}"))?;
        let q = quot_degree(&gp(g, p)).map_err(|e| e.to_string())?;
        let rel = (v.value - q.to_f64()).abs() / q.to_f64();
        if rel > 1e-6 || Rational::from(v.nearest.clone()) != q {
            return Err(format!("({g},{p}): holla {} vs quot {q}", v.value));
        }
    }
    within_budget("holla", start, Duration::from_secs(10), format!("{} cases", cases.len()))
}

fn property(name: &str, cases: u32, run: impl FnOnce(&mut TestRunner) -> Result<(), String>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    run(&mut runner).map_err(|e| format!("{name}: {e}"))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

/// 7. Property suites.
fn properties() -> Verdict {
    // Bernoulli odd vanishing.
    let b = bernoulli_numbers(80);
    if let Some(j) = (3..80).step_by(2).find(|&j| !b.get(j).unwrap().is_zero()) {
        return Err(format!("B_{j} is nonzero"));
    }

    // V-polynomial degree, parity, vanishing at 1, leading coefficient,
    // truncation stability.
    for n in 1..=8u32 {
        let v = v_polynomial(n);
        let lead = {
            let sign = if n % 2 == 1 { Rational::one() } else { -Rational::one() };
            sign * Rational::from(2).pow(2 * n as i32) * b.get(2 * n as usize).unwrap().clone()
                / Rational::from(factorial(2 * u64::from(n)))
        };
        if v.poly.degree() != Some(2 * n as usize)
            || !v.poly.is_even()
            || !v.evaluate(&Rational::one()).is_zero()
            || v.poly.leading_coefficient() != lead
        {
            return Err(format!("V({n}, k) = {} fails shape checks", v.poly));
        }
        if v_polynomial_at_truncation(n, 2 * i64::from(n) + 6) != v {
            return Err(format!("V({n}, k) changes when truncation is raised by 4"));
        }
    }
    if !v_polynomial(0).evaluate(&Rational::one()).is_zero() {
        return Err("V(0, 1) != 0".into());
    }

    // Laurent inverse identity.
    let series = (
        -3i64..=3,
        small_rational().prop_filter("nonzero", |r| !r.is_zero()),
        prop::collection::vec(small_rational(), 0..8),
    )
        .prop_map(|(start, lead, rest)| {
            let mut c = vec![lead];
            c.extend(rest);
            let t = start + c.len() as i64 - 1;
            LaurentSeries::from_rationals(start, c, t)
        });
    property("laurent inverse", 256, |runner| {
        runner
            .run(&series, |a| {
                let prod = a.multiply(&a.invert().expect("invertible lead"));
                for e in prod.valuation().min(0)..=prod.truncation() {
                    let expect = if e == 0 { Rational::one() } else { Rational::zero() };
                    prop_assert_eq!(prod.coeff(e), Some(expect));
                }
                Ok(())
            })
            .map_err(|e| e.to_string())
    })?;

    // JSON round trip of rationals, polynomials and reports.
    property("rational json", 256, |runner| {
        runner
            .run(&(any::<i64>(), 1i64..i64::MAX), |(n, d)| {
                let x = Rational::new(n, d);
                let text = serde_json::to_string(&x).unwrap();
                prop_assert_eq!(serde_json::from_str::<Rational>(&text).unwrap(), x);
                Ok(())
            })
            .map_err(|e| e.to_string())
    })?;
    property("polynomial json", 256, |runner| {
        runner
            .run(&prop::collection::vec(small_rational(), 1..8), |c| {
                let p = Polynomial::new(Indeterminate::P, c);
                prop_assume!(p.degree().unwrap_or(0) >= 1);
                let text = serde_json::to_string(&p).unwrap();
                prop_assert_eq!(serde_json::from_str::<Polynomial>(&text).unwrap(), p);
                Ok(())
            })
            .map_err(|e| e.to_string())
    })?;
    for (g, p) in grid(6, 31) {
        let report = degree_report(&gp(g, p)).map_err(|e| e.to_string())?;
        let text = serde_json::to_string(&report).unwrap();
        let back: dormant_core::formulas::DegreeReport =
            serde_json::from_str(&text).map_err(|e| e.to_string())?;
        if back != report {
            return Err(format!("report ({g},{p}) does not round-trip"));
        }
    }
    Ok("bernoulli, V shape, truncation, laurent inverse, json round-trip".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("AC1 golden table g=2..10", golden_table),
        ("AC2 g=2 equals (p^3-p)/24, p<=97", genus_two),
        ("AC3 three-path agreement g<=8, p<=31", three_paths),
        ("AC4 relation web", relation_web),
        ("AC5 integrality g<=10, p<=97", integrality),
        ("AC6 Holla specialisation", holla_specialisation),
        ("AC7 property suites", properties),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

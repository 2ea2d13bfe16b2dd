use serde::{Deserialize, Serialize};

use super::{
    bundle_count, degree, degree_numeric, degree_polynomial, degree_via_zeta, quot_degree,
    verlinde_dimension, FormulaError, GenusPrime,
};
use crate::exact::{Polynomial, Rational};

pub const UNPROVEN_LABEL: &str = "formula value, unproven range";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

/// Every quantity attached to one `(g, p)` plus the consistency verdicts
/// that tie them together.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub g: i64,
    pub p: i64,
    pub degree: Rational,
    pub quot_degree: Rational,
    pub bundle_count: Rational,
    pub verlinde_dim: Rational,
    pub zeta_form: Rational,
    pub polynomial: Polynomial,
    pub checks: Vec<Check>,
    /// `None` inside `p > 2(g-1)`, otherwise [`UNPROVEN_LABEL`].
    pub range: Option<String>,
}

impl DegreeReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn degree_report(gp: &GenusPrime) -> Result<DegreeReport, FormulaError> {
    let (g, p) = (gp.genus(), gp.prime());
    let deg = degree(gp)?;
    let zeta_form = degree_via_zeta(gp)?;
    let quot = quot_degree(gp)?;
    let bundles = bundle_count(gp)?;
    let verlinde = verlinde_dimension(g, (p - 2) as u64)?;
    let polynomial = degree_polynomial(g)?;
    let pr = Rational::from(p);
    let numeric = degree_numeric(g, p);
    let float_gap = (numeric - deg.to_f64()).abs() / deg.to_f64().abs().max(f64::MIN_POSITIVE);

    let checks = [
        ("zeta_trace_path", zeta_form == deg),
        ("quot_degree_is_p^g_degree", quot == pr.pow(g as i32) * &deg),
        ("bundle_count_is_2^2g_degree", bundles == Rational::from(2).pow(2 * g as i32) * &deg),
        ("verlinde_at_p-2_over_2^g", &verlinde / &Rational::from(2).pow(g as i32) == deg),
        ("polynomial_evaluates_to_degree", polynomial.evaluate(&pr) == deg),
        ("degree_is_positive_integer", deg.is_integer() && deg.is_positive()),
        ("float_sine_sum_within_1e-8", float_gap <= 1e-8),
    ]
    .into_iter()
    .map(|(name, pass)| Check { name: name.to_string(), pass })
    .collect();

    Ok(DegreeReport {
        g,
        p,
        degree: deg,
        quot_degree: quot,
        bundle_count: bundles,
        verlinde_dim: verlinde,
        zeta_form,
        polynomial,
        checks,
        range: (!gp.joshi_range()).then(|| UNPROVEN_LABEL.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_for_genus_two() {
        let r = degree_report(&GenusPrime::new(2, 3).unwrap()).unwrap();
        assert_eq!(r.degree, Rational::one());
        assert_eq!(r.verlinde_dim, Rational::from(4));
        assert!(r.all_pass(), "{:?}", r.checks);
        assert_eq!(r.range, None);
    }

    #[test]
    fn out_of_range_report_is_labelled() {
        let gp = GenusPrime::new(4, 5).unwrap();
        assert!(degree_report(&gp).is_err());
        let r = degree_report(&gp.allow_out_of_range(true)).unwrap();
        assert_eq!(r.range.as_deref(), Some(UNPROVEN_LABEL));
    }
}

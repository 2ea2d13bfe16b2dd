//! The counted quantities and the relations between them.
//!
//! Every exact quantity is built from `V(g-1, ·)` evaluated exactly; floats
//! only appear in the Holla root-of-unity sum and in test oracles.

mod holla;
mod quot;
mod report;

pub use holla::{holla_vi_degree, HollaValue, DEFAULT_PRECISION, MAX_PRECISION};
pub use quot::{frobenius_pushforward_profile, generic_quot_invariants, QuotProfile};
pub use report::{degree_report, Check, DegreeReport, UNPROVEN_LABEL};

use crate::cyclotomic::{zeta_sum_exact, CyclotomicError};
use crate::exact::{Indeterminate, Polynomial, Rational};
use crate::primes::is_odd_prime;
use crate::trig::v_polynomial;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormulaError {
    #[error("genus must be at least 2, got {0}")]
    Genus(i64),
    #[error("characteristic must be an odd prime, got {0}")]
    NotOddPrime(i64),
    #[error("the formula is only established for p > 2(g-1); got g = {g}, p = {p}")]
    OutOfRange { g: i64, p: i64 },
    #[error("invalid Quot data: {0}")]
    QuotData(String),
    #[error("sign exponent (r-1)(br-(g-1)r^2)/n = {numerator}/{n} is not an integer")]
    SignExponent { numerator: i64, n: i64 },
    #[error("root-of-unity sum did not settle on an integer at {precision} bits: {detail}")]
    NumericInstability { precision: usize, detail: String },
}

impl From<CyclotomicError> for FormulaError {
    fn from(e: CyclotomicError) -> Self {
        match e {
            CyclotomicError::NotOddPrime(p) => FormulaError::NotOddPrime(p),
            CyclotomicError::Genus(g) => FormulaError::Genus(g),
            CyclotomicError::NumericInstability { imag } => FormulaError::NumericInstability {
                precision: 53,
                detail: format!("imaginary part {imag:e}"),
            },
        }
    }
}

/// A genus and an odd characteristic.
///
/// The closed formulas are only asserted for `p > 2(g-1)`. Outside that
/// range every operation refuses unless the value was built with
/// [`GenusPrime::allow_out_of_range`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenusPrime {
    g: i64,
    p: i64,
    allow_out_of_range: bool,
}

impl GenusPrime {
    pub fn new(g: i64, p: i64) -> Result<Self, FormulaError> {
        if g < 2 {
            return Err(FormulaError::Genus(g));
        }
        if !is_odd_prime(p) {
            return Err(FormulaError::NotOddPrime(p));
        }
        Ok(GenusPrime { g, p, allow_out_of_range: false })
    }

    pub fn allow_out_of_range(mut self, allow: bool) -> Self {
        self.allow_out_of_range = allow;
        self
    }

    pub fn genus(&self) -> i64 {
        self.g
    }

    pub fn prime(&self) -> i64 {
        self.p
    }

    /// `p > 2(g-1)`.
    pub fn joshi_range(&self) -> bool {
        self.p > 2 * (self.g - 1)
    }

    pub fn overrides_range(&self) -> bool {
        self.allow_out_of_range
    }

    fn require_hypothesis(&self) -> Result<(), FormulaError> {
        if self.joshi_range() || self.allow_out_of_range {
            Ok(())
        } else {
            Err(FormulaError::OutOfRange { g: self.g, p: self.p })
        }
    }
}

fn two_pow(e: i64) -> Rational {
    Rational::from(2).pow(e as i32)
}

/// `V(g-1, p)`, exactly.
fn v_at_prime(gp: &GenusPrime) -> Rational {
    v_polynomial((gp.g - 1) as u32).evaluate(&Rational::from(gp.p))
}

/// Generic number of dormant indigenous bundles:
/// `p^{g-1} / 2^{2g-1} · V(g-1, p)`.
pub fn degree(gp: &GenusPrime) -> Result<Rational, FormulaError> {
    gp.require_hypothesis()?;
    let p = Rational::from(gp.p);
    Ok(p.pow((gp.g - 1) as i32) / two_pow(2 * gp.g - 1) * v_at_prime(gp))
}

/// The same count from the root-of-unity form,
/// `(-1)^{g-1} p^{g-1} / 2 · Σ ζ^{g-1}/(ζ-1)^{2g-2}`, via the cyclotomic trace.
pub fn degree_via_zeta(gp: &GenusPrime) -> Result<Rational, FormulaError> {
    gp.require_hypothesis()?;
    let sum = zeta_sum_exact(gp.g, gp.p)?;
    let sign = if (gp.g - 1) % 2 == 0 { Rational::one() } else { -Rational::one() };
    let p = Rational::from(gp.p);
    Ok(sign * p.pow((gp.g - 1) as i32) / Rational::from(2) * sum)
}

/// Degree of the Quot scheme of rank-2 degree-0 subsheaves of the Frobenius
/// pushforward: `p^{2g-1} / 2^{2g-1} · V(g-1, p)`.
pub fn quot_degree(gp: &GenusPrime) -> Result<Rational, FormulaError> {
    gp.require_hypothesis()?;
    let p = Rational::from(gp.p);
    Ok(p.pow((2 * gp.g - 1) as i32) / two_pow(2 * gp.g - 1) * v_at_prime(gp))
}

/// Number of maximally unstable Frobenius-destabilised bundles:
/// `2 p^{g-1} · V(g-1, p)`.
pub fn bundle_count(gp: &GenusPrime) -> Result<Rational, FormulaError> {
    gp.require_hypothesis()?;
    let p = Rational::from(gp.p);
    Ok(Rational::from(2) * p.pow((gp.g - 1) as i32) * v_at_prime(gp))
}

/// Verlinde number `dim H^0(SU_C(2), L^k)`:
/// `(k+2)^{g-1} / 2^{g-1} · V(g-1, k+2)`.
pub fn verlinde_dimension(g: i64, level: u64) -> Result<Rational, FormulaError> {
    if g < 2 {
        return Err(FormulaError::Genus(g));
    }
    let k2 = Rational::from(level + 2);
    let v = v_polynomial((g - 1) as u32).evaluate(&k2);
    Ok(k2.pow((g - 1) as i32) / two_pow(g - 1) * v)
}

/// The count as a polynomial in `p` of degree `3g - 3`.
pub fn degree_polynomial(g: i64) -> Result<Polynomial, FormulaError> {
    if g < 2 {
        return Err(FormulaError::Genus(g));
    }
    let v = v_polynomial((g - 1) as u32).poly.with_indeterminate(Indeterminate::P);
    Ok(v.shift((g - 1) as usize).scale(&two_pow(2 * g - 1).recip().expect("nonzero")))
}

/// Double-precision sine sum `p^{g-1}/2^{2g-1} Σ 1/sin^{2g-2}(πθ/p)`, an
/// oracle for [`degree`] that shares no code with the exact paths.
pub fn degree_numeric(g: i64, p: i64) -> f64 {
    let sum: f64 = (1..p)
        .map(|t| (std::f64::consts::PI * t as f64 / p as f64).sin().powi(-(2 * g as i32 - 2)))
        .sum();
    (p as f64).powi(g as i32 - 1) / 2f64.powi(2 * g as i32 - 1) * sum
}

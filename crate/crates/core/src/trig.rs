//! Cosecant power sums `V(n,k) = Σ_{θ=1}^{k-1} 1/sin^{2n}(πθ/k)`.
//!
//! `V(n, k)` is a polynomial in `k` of degree `2n`. It is obtained exactly as
//! minus the residue at `x = 0` of `k·cot(kx) / sin^{2n}(x)`, with both
//! factors expanded from the Bernoulli-number series of `cot`.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{OnceLock, RwLock};

use crate::exact::{bernoulli_numbers, Indeterminate, LaurentSeries, Polynomial, Rational};
use crate::exact::rational::factorial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TrigError {
    #[error("V(n, k) needs k >= 2, got k = {0}")]
    Domain(i64),
}

/// `V(n, ·)` as an exact polynomial in `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolynomial {
    pub n: u32,
    pub poly: Polynomial,
}

impl VPolynomial {
    pub fn evaluate(&self, k: &Rational) -> Rational {
        self.poly.evaluate(k)
    }
}

/// `(-1)^j 2^{2j} B_{2j} / (2j)!` for `j = 0..=max_j`: the coefficient of
/// `x^{2j-1}` in `cot(x)`.
fn cot_coefficients(max_j: usize) -> Vec<Rational> {
    let bernoulli = bernoulli_numbers(2 * max_j + 1);
    (0..=max_j)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let b = bernoulli.get(2 * j).expect("table sized above");
            b * &Rational::new(
                num_bigint::BigInt::from(sign) << (2 * j),
                factorial(2 * j as u64),
            )
        })
        .collect()
}

fn max_j_through(order: i64) -> usize {
    // x^{2j-1} <= order
    ((order + 1).div_euclid(2)).max(0) as usize
}

/// `cot(x)` through `x^order` (`order >= -1`).
pub fn cot_series(order: i64) -> LaurentSeries<Rational> {
    assert!(order >= -1, "cot series order must be >= -1");
    let len = (order + 2) as usize;
    let mut coeffs = vec![Rational::zero(); len];
    for (j, c) in cot_coefficients(max_j_through(order)).into_iter().enumerate() {
        coeffs[2 * j] = c;
    }
    LaurentSeries::from_rationals(-1, coeffs, order)
}

/// `k·cot(kx)` as a series in `x` over `Q[k]`, through `x^order`.
pub fn cot_scaled_series(order: i64) -> LaurentSeries<Polynomial> {
    assert!(order >= -1, "cot series order must be >= -1");
    let len = (order + 2) as usize;
    let mut coeffs = vec![Polynomial::zero(Indeterminate::K); len];
    for (j, c) in cot_coefficients(max_j_through(order)).into_iter().enumerate() {
        coeffs[2 * j] = Polynomial::monomial(Indeterminate::K, c, 2 * j);
    }
    LaurentSeries::new(
        -1,
        coeffs,
        order,
        Polynomial::constant(Indeterminate::K, Rational::one()),
    )
}

/// `1/sin^{2n}(x) = (1 + cot²x)^n` through `x^order` (`order >= -2n`).
pub fn inv_sin_power_series(n: u32, order: i64) -> LaurentSeries<Rational> {
    assert!(n >= 1, "sine power must be positive");
    let n64 = i64::from(n);
    assert!(order >= -2 * n64, "order below the pole");
    // (1 + cot²)^n has relative precision one less than cot's, and the
    // n-th power keeps it: T = T_cot - 1 - 2(n - 1).
    let cot = cot_series(order + 2 * n64 - 1);
    let cot_sq = cot.multiply(&cot);
    let one = LaurentSeries::monomial(Rational::one(), 0, cot_sq.truncation());
    let csc_sq = cot_sq.add(&one);
    csc_sq.pow(n).truncate(order)
}

/// Truncation used for both factors of the residue: the pole has order
/// `2n + 1`.
fn residue_truncation(n: u32) -> i64 {
    2 * i64::from(n) + 2
}

fn memo() -> &'static RwLock<HashMap<u32, VPolynomial>> {
    static MEMO: OnceLock<RwLock<HashMap<u32, VPolynomial>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `V(n, k)` as a polynomial in `k`. Results are memoised process-wide.
pub fn v_polynomial(n: u32) -> VPolynomial {
    if let Some(v) = memo().read().expect("memo lock").get(&n) {
        return v.clone();
    }
    let v = v_polynomial_at_truncation(n, residue_truncation(n));
    memo().write().expect("memo lock").insert(n, v.clone());
    v
}

/// Same as [`v_polynomial`] but with both series expanded through
/// `x^truncation`; any `truncation >= 2n - 1` gives the same answer.
pub fn v_polynomial_at_truncation(n: u32, truncation: i64) -> VPolynomial {
    if n == 0 {
        let k = Polynomial::variable(Indeterminate::K);
        let one = Polynomial::constant(Indeterminate::K, Rational::one());
        return VPolynomial { n, poly: &k - &one };
    }
    let integrand = cot_scaled_series(truncation)
        .multiply(&inv_sin_power_series(n, truncation).promote(Indeterminate::K));
    let residue = integrand
        .coeff(-1)
        .expect("truncation too low to read the residue");
    VPolynomial { n, poly: -residue }
}

/// Direct double-precision summation of `V(n, k)`. For the sizes used here
/// (`n <= 10`, `k <= 100`) the relative error stays below `10·k·ε`.
pub fn v_numeric(n: u32, k: i64) -> Result<f64, TrigError> {
    if k < 2 {
        return Err(TrigError::Domain(k));
    }
    let kf = k as f64;
    Ok((1..k)
        .map(|theta| {
            let s = (PI * theta as f64 / kf).sin();
            s.powi(-2 * n as i32)
        })
        .sum())
}

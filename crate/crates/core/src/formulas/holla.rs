//! Holla's root-of-unity formula for the degree of a zero-dimensional Quot
//! scheme, evaluated in arbitrary-precision binary floating point.
//!
//! The sum runs over ordered `r`-tuples of distinct `n`-th roots of unity.
//! Its value is an integer; the evaluator checks that before returning and
//! doubles the working precision when the check fails.

use astro_float::{BigFloat, Consts, RoundingMode, Sign, WORD_BIT_SIZE};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::quot::split_degree;
use super::FormulaError;

pub const DEFAULT_PRECISION: usize = 128;
pub const MAX_PRECISION: usize = 1024;

/// Relative tolerance for both the imaginary part and the distance to the
/// nearest integer.
const INTEGRALITY_TOLERANCE: f64 = 1e-6;

const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Clone, Debug, PartialEq)]
pub struct HollaValue {
    /// Real part of the evaluated sum, rounded to `f64`.
    pub value: f64,
    /// Nearest integer to the real part.
    pub nearest: BigInt,
    /// Working precision (bits) that passed the integrality check.
    pub precision: usize,
}

#[derive(Clone, Debug)]
struct Complex {
    re: BigFloat,
    im: BigFloat,
}

impl Complex {
    fn from_int(v: i64, prec: usize) -> Self {
        Complex { re: BigFloat::from_i64(v, prec), im: BigFloat::from_i64(0, prec) }
    }

    fn sub(&self, o: &Self, prec: usize) -> Self {
        Complex { re: self.re.sub(&o.re, prec, RM), im: self.im.sub(&o.im, prec, RM) }
    }

    fn add(&self, o: &Self, prec: usize) -> Self {
        Complex { re: self.re.add(&o.re, prec, RM), im: self.im.add(&o.im, prec, RM) }
    }

    fn mul(&self, o: &Self, prec: usize) -> Self {
        let re = self.re.mul(&o.re, prec, RM).sub(&self.im.mul(&o.im, prec, RM), prec, RM);
        let im = self.re.mul(&o.im, prec, RM).add(&self.im.mul(&o.re, prec, RM), prec, RM);
        Complex { re, im }
    }

    fn div(&self, o: &Self, prec: usize) -> Self {
        let den = o.re.mul(&o.re, prec, RM).add(&o.im.mul(&o.im, prec, RM), prec, RM);
        let re = self.re.mul(&o.re, prec, RM).add(&self.im.mul(&o.im, prec, RM), prec, RM);
        let im = self.im.mul(&o.re, prec, RM).sub(&self.re.mul(&o.im, prec, RM), prec, RM);
        Complex { re: re.div(&den, prec, RM), im: im.div(&den, prec, RM) }
    }

    fn pow(&self, e: u32, prec: usize) -> Self {
        let mut acc = Complex::from_int(1, prec);
        for _ in 0..e {
            acc = acc.mul(self, prec);
        }
        acc
    }
}

/// Nearest integer to `x` (ties to even).
fn nearest_integer(x: &BigFloat) -> Option<BigInt> {
    let rounded = x.round(0, RM);
    if rounded.is_zero() {
        return Some(BigInt::zero());
    }
    let (words, _, sign, exponent, _) = rounded.as_raw_parts()?;
    // value = 0.m × 2^exponent with `m` spread over `words` (least
    // significant word first).
    let mut mantissa = BigUint::zero();
    for w in words.iter().rev() {
        mantissa = (mantissa << WORD_BIT_SIZE) | BigUint::from(*w);
    }
    let bits = (words.len() * WORD_BIT_SIZE) as i64;
    let shift = bits - exponent as i64;
    let magnitude = if shift >= 0 {
        mantissa >> (shift as u64)
    } else {
        mantissa << ((-shift) as u64)
    };
    let n = BigInt::from(magnitude);
    Some(if sign == Sign::Neg { -n } else { n })
}

fn bigint_to_bigfloat(z: &BigInt, prec: usize) -> BigFloat {
    let (sign, limbs) = z.to_u64_digits();
    let radix = BigFloat::from_u64(2, prec).powi(64, prec, RM);
    let mut acc = BigFloat::from_u64(0, prec);
    for limb in limbs.iter().rev() {
        acc = acc.mul(&radix, prec, RM).add(&BigFloat::from_u64(*limb, prec), prec, RM);
    }
    if sign == num_bigint::Sign::Minus {
        acc.neg()
    } else {
        acc
    }
}

fn bigfloat_to_f64(x: &BigFloat) -> f64 {
    match x.as_raw_parts() {
        None => f64::NAN,
        Some((words, _, sign, exponent, _)) => {
            let Some(top) = words.last() else { return 0.0 };
            let magnitude = (*top as f64) * 2f64.powi(exponent - WORD_BIT_SIZE as i32);
            if sign == Sign::Neg {
                -magnitude
            } else {
                magnitude
            }
        }
    }
}

fn sign_exponent(n: i64, b: i64, r: i64, g: i64) -> Result<i64, FormulaError> {
    let numerator = (r - 1) * (b * r - (g - 1) * r * r);
    if numerator % n != 0 {
        return Err(FormulaError::SignExponent { numerator, n });
    }
    Ok(numerator / n)
}

/// Ordered tuples of `r` distinct indices in `0..n`.
fn distinct_tuples(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    let mut used = vec![false; n];
    fn go(n: usize, r: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(n, r, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    go(n, r, &mut current, &mut used, &mut out);
    out
}

fn evaluate_at(n: i64, r: i64, g: i64, b: i64, sign_exp: i64, prec: usize) -> Result<(BigFloat, BigFloat), FormulaError> {
    let mut consts = Consts::new().map_err(|e| FormulaError::NumericInstability {
        precision: prec,
        detail: format!("constant cache: {e:?}"),
    })?;
    // Extra guard bits for the trigonometric evaluations.
    let work = prec + 32;
    let two_pi = consts.pi(work, RM).mul(&BigFloat::from_i64(2, work), work, RM);
    let roots: Vec<Complex> = (0..n)
        .map(|j| {
            let angle = two_pi.mul(&BigFloat::from_i64(j, work), work, RM)
                .div(&BigFloat::from_i64(n, work), work, RM);
            Complex {
                re: angle.cos(work, RM, &mut consts),
                im: angle.sin(work, RM, &mut consts),
            }
        })
        .collect();

    let numerator_exp = b - g + 1;
    let mut total = Complex::from_int(0, work);
    for tuple in distinct_tuples(n as usize, r as usize) {
        let index_sum: i64 = tuple.iter().map(|&j| j as i64).sum();
        let numerator = roots[(index_sum * numerator_exp).rem_euclid(n) as usize].clone();
        let mut vandermonde = Complex::from_int(1, work);
        for (a, &i) in tuple.iter().enumerate() {
            for (c, &j) in tuple.iter().enumerate() {
                if a != c {
                    vandermonde = vandermonde.mul(&roots[i].sub(&roots[j], work), work);
                }
            }
        }
        let term = numerator.div(&vandermonde.pow((g - 1) as u32, work), work);
        total = total.add(&term, work);
    }

    let r_factorial: i64 = (1..=r).product();
    let mut scale = BigFloat::from_i64(n, work)
        .powi((r * (g - 1)) as usize, work, RM)
        .div(&BigFloat::from_i64(r_factorial, work), work, RM);
    if sign_exp.rem_euclid(2) == 1 {
        scale = scale.neg();
    }
    Ok((total.re.mul(&scale, work, RM), total.im.mul(&scale, work, RM)))
}

/// `(-1)^{(r-1)(br-(g-1)r²)/n} n^{r(g-1)}/r! Σ (Πρ_i)^{b-g+1} / Π_{i≠j}(ρ_i-ρ_j)^{g-1}`.
///
/// Assumes the bundle is general enough that `s_r = r(n-r)(g-1)`; that
/// hypothesis cannot be checked numerically.
pub fn holla_vi_degree(n: i64, d: i64, r: i64, g: i64, precision: usize) -> Result<HollaValue, FormulaError> {
    if n < 2 || r < 1 || r >= n {
        return Err(FormulaError::QuotData(format!("need n >= 2 and 1 <= r < n, got n = {n}, r = {r}")));
    }
    if g < 2 {
        return Err(FormulaError::Genus(g));
    }
    let (_, b) = split_degree(d, n);
    let sign_exp = sign_exponent(n, b, r, g)?;

    let tolerance = BigFloat::from_f64(INTEGRALITY_TOLERANCE, 64);
    let mut prec = precision.max(64);
    loop {
        let (re, im) = evaluate_at(n, r, g, b, sign_exp, prec)?;
        let nearest = nearest_integer(&re);
        let scale = {
            let a = re.abs();
            let one = BigFloat::from_i64(1, prec);
            if a.cmp(&one).is_some_and(|c| c < 0) { one } else { a }
        };
        let limit = scale.mul(&tolerance, prec, RM);
        let within = |x: &BigFloat| x.abs().cmp(&limit).is_some_and(|c| c <= 0);
        let detail = match &nearest {
            None => "value is not finite".to_string(),
            Some(_) if !within(&im) => format!("imaginary part {im}"),
            Some(z) => {
                let gap = re.sub(&bigint_to_bigfloat(z, prec), prec, RM);
                if within(&gap) {
                    return Ok(HollaValue {
                        value: bigfloat_to_f64(&re),
                        nearest: z.clone(),
                        precision: prec,
                    });
                }
                format!("real part {re} is {gap} away from {z}")
            }
        };
        if prec * 2 > MAX_PRECISION {
            return Err(FormulaError::NumericInstability { precision: prec, detail });
        }
        prec *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn raw_part_conversion() {
        for v in [0i64, 1, -1, 7, 125, -1875, 1 << 40, 123_456_789_012] {
            let x = BigFloat::from_i64(v, 128);
            assert_eq!(nearest_integer(&x), Some(BigInt::from(v)), "{v}");
        }
        let x = BigFloat::from_f64(41.6, 128);
        assert_eq!(nearest_integer(&x), Some(BigInt::from(42)));
        assert!((bigfloat_to_f64(&x) - 41.6).abs() < 1e-12);
        assert_eq!(bigfloat_to_f64(&BigFloat::from_i64(-1875, 128)), -1875.0);
        let big = BigInt::from(3u8).pow(90);
        assert_eq!(nearest_integer(&bigint_to_bigfloat(&big, 256)), Some(big.clone()));
        assert_eq!(nearest_integer(&bigint_to_bigfloat(&-big.clone(), 256)), Some(-big));
    }

    #[test]
    fn tuples_are_distinct_and_ordered() {
        let t = distinct_tuples(4, 2);
        assert_eq!(t.len(), 12);
        assert!(t.iter().all(|v| v[0] != v[1]));
        assert_eq!(distinct_tuples(5, 3).len(), 60);
    }

    #[test]
    fn frobenius_specialisations() {
        let v = holla_vi_degree(3, 1, 2, 2, DEFAULT_PRECISION).unwrap();
        assert_eq!(v.nearest, BigInt::from(9));
        assert!((v.value - 9.0).abs() < 1e-9);
        let v = holla_vi_degree(5, 3, 2, 2, DEFAULT_PRECISION).unwrap();
        assert_eq!(v.nearest, BigInt::from(125));
    }

    #[test]
    fn non_integral_sign_exponent() {
        assert_eq!(
            holla_vi_degree(5, 3, 2, 3, DEFAULT_PRECISION),
            Err(FormulaError::SignExponent { numerator: -4, n: 5 })
        );
    }

    #[test]
    fn line_subbundles_of_rank_two() {
        // r = 1: sign exponent is 0, n^{g-1} Σ_ρ ρ^{b-g+1}; the sum picks
        // out n when b - g + 1 ≡ 0 (mod n).
        let v = holla_vi_degree(2, 1 - 2, 1, 2, DEFAULT_PRECISION).unwrap();
        // d = -1: a = 0, b = 1, exponent b - g + 1 = 0 → 2 · 2 = 4.
        assert_eq!(v.nearest, BigInt::from(4));
    }
}

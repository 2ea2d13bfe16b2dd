//! Truncated Laurent series with an explicit reliability bound.
//!
//! A series is known exactly for exponents `valuation..=truncation` and
//! unknown above. Every operation narrows `truncation` to what its inputs
//! actually determine, so a coefficient that can be read back is always
//! exact.

use std::fmt;

use super::polynomial::{Indeterminate, Polynomial};
use super::rational::Rational;

/// Coefficient rings a series may live over: `Q` and `Q[k]`.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn inverse(&self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
}

/// Only nonzero constants are units in `Q[k]`.
impl Coefficient for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.indeterminate())
    }
    fn one_like(&self) -> Self {
        Polynomial::constant(self.indeterminate(), Rational::one())
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_constant() {
            self.coeff(0)
                .recip()
                .map(|c| Polynomial::constant(self.indeterminate(), c))
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series has no invertible leading coefficient")]
    Singular,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<C> {
    valuation: i64,
    truncation: i64,
    /// `coeffs[i]` multiplies `x^(valuation + i)`; length is
    /// `truncation - valuation + 1`.
    coeffs: Vec<C>,
    /// Template for building zeros and ones in the right ring.
    unit: C,
}

impl<C: Coefficient> LaurentSeries<C> {
    /// Series whose coefficient at `x^(start + i)` is `coeffs[i]`, known
    /// through exponent `truncation`. Missing entries up to `truncation`
    /// are zero. Leading zeros are stripped into the valuation.
    pub fn new(start: i64, coeffs: Vec<C>, truncation: i64, unit: C) -> Self {
        assert!(truncation >= start - 1, "truncation below series start");
        let one = unit.one_like();
        let mut s = LaurentSeries {
            valuation: start,
            truncation,
            coeffs,
            unit: one,
        };
        s.coeffs.truncate((truncation - start + 1).max(0) as usize);
        let len = (truncation - start + 1).max(0) as usize;
        let zero = s.unit.zero_like();
        s.coeffs.resize(len, zero);
        s.normalize();
        s
    }

    /// `c * x^exp`, known through `truncation`.
    pub fn monomial(c: C, exp: i64, truncation: i64) -> Self {
        let unit = c.one_like();
        if exp > truncation {
            return LaurentSeries::new(truncation + 1, Vec::new(), truncation, unit);
        }
        LaurentSeries::new(exp, vec![c], truncation, unit)
    }

    fn normalize(&mut self) {
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            // Identically zero through the truncation.
            self.coeffs.clear();
            self.valuation = self.truncation + 1;
        } else if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.valuation += lead_zeros as i64;
        }
    }

    /// Lowest exponent with a nonzero coefficient; `truncation + 1` when
    /// the series vanishes through its truncation.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn truncation(&self) -> i64 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact coefficient at `x^exp`, or `None` above the truncation.
    pub fn coeff(&self, exp: i64) -> Option<C> {
        if exp > self.truncation {
            None
        } else if exp < self.valuation {
            Some(self.unit.zero_like())
        } else {
            Some(self.coeffs[(exp - self.valuation) as usize].clone())
        }
    }

    /// `(exponent, coefficient)` pairs over the known range, zeros skipped.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.valuation + i as i64, c))
    }

    /// Drops everything above `order` (no-op if already lower).
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.truncation {
            return self.clone();
        }
        if order < self.valuation {
            return LaurentSeries::new(order + 1, Vec::new(), order, self.unit.clone());
        }
        LaurentSeries::new(self.valuation, self.coeffs.clone(), order, self.unit.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.sub(b))
    }

    fn combine(&self, other: &Self, op: impl Fn(&C, &C) -> C) -> Self {
        let truncation = self.truncation.min(other.truncation);
        let start = self.valuation.min(other.valuation).min(truncation + 1);
        let coeffs = (start..=truncation)
            .map(|e| op(&self.coeff(e).unwrap(), &other.coeff(e).unwrap()))
            .collect();
        LaurentSeries::new(start, coeffs, truncation, self.unit.clone())
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            valuation: self.valuation,
            truncation: self.truncation,
            coeffs: self.coeffs.iter().map(C::neg).collect(),
            unit: self.unit.clone(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        LaurentSeries::new(
            self.valuation,
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
            self.truncation,
            self.unit.clone(),
        )
    }

    /// Cauchy product. The result is reliable through
    /// `min(val(a) + T_b, val(b) + T_a)`.
    pub fn multiply(&self, other: &Self) -> Self {
        let valuation = self.valuation + other.valuation;
        let truncation = (self.valuation + other.truncation)
            .min(other.valuation + self.truncation);
        if truncation < valuation {
            return LaurentSeries::new(truncation + 1, Vec::new(), truncation, self.unit.clone());
        }
        let len = (truncation - valuation + 1) as usize;
        let zero = self.unit.zero_like();
        let mut coeffs = vec![zero; len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        LaurentSeries::new(valuation, coeffs, truncation, self.unit.clone())
    }

    /// Multiplicative inverse, reliable through `T_a - 2·val(a)`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let lead = self.coeffs.first().ok_or(SeriesError::Singular)?;
        let lead_inv = lead.inverse().ok_or(SeriesError::Singular)?;
        let precision = (self.truncation - self.valuation) as usize;
        // Solve Σ_{i≤m} a_i b_{m-i} = δ_{m0} term by term.
        let mut inv: Vec<C> = Vec::with_capacity(precision + 1);
        inv.push(lead_inv.clone());
        for m in 1..=precision {
            let mut acc = self.unit.zero_like();
            for i in 1..=m {
                if let Some(a) = self.coeffs.get(i) {
                    acc = acc.add(&a.mul(&inv[m - i]));
                }
            }
            inv.push(acc.neg().mul(&lead_inv));
        }
        Ok(LaurentSeries::new(
            -self.valuation,
            inv,
            self.truncation - 2 * self.valuation,
            self.unit.clone(),
        ))
    }

    /// `self^n` for `n ≥ 1`, by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        assert!(n >= 1, "series power must be positive");
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.multiply(self);
        }
        acc
    }
}

impl LaurentSeries<Rational> {
    /// Embeds a rational series into `Q[var]` (constants only).
    pub fn promote(&self, var: Indeterminate) -> LaurentSeries<Polynomial> {
        LaurentSeries::new(
            self.valuation,
            self.coeffs
                .iter()
                .map(|c| Polynomial::constant(var, c.clone()))
                .collect(),
            self.truncation,
            Polynomial::constant(var, Rational::one()),
        )
    }

    pub fn from_rationals(start: i64, coeffs: Vec<Rational>, truncation: i64) -> Self {
        LaurentSeries::new(start, coeffs, truncation, Rational::one())
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for LaurentSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*x^{e}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.truncation + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn series(start: i64, coeffs: &[(i64, i64)], trunc: i64) -> LaurentSeries<Rational> {
        LaurentSeries::from_rationals(start, coeffs.iter().map(|&(n, d)| q(n, d)).collect(), trunc)
    }

    #[test]
    fn inverse_monomials_multiply_to_one() {
        let a = series(-1, &[(1, 1)], 5);
        let b = series(1, &[(1, 1)], 7);
        let prod = a.multiply(&b);
        assert_eq!(prod.coeff(0), Some(Rational::one()));
        assert_eq!(prod.terms().count(), 1);
        assert_eq!(prod.truncation(), 6);
    }

    #[test]
    fn geometric_series_identity() {
        let one_minus_x = series(0, &[(1, 1), (-1, 1)], 8);
        let geom = series(0, &[(1, 1); 9], 8);
        let prod = one_minus_x.multiply(&geom);
        assert_eq!(prod.truncation(), 8);
        for e in 0..=8 {
            let expect = if e == 0 { Rational::one() } else { Rational::zero() };
            assert_eq!(prod.coeff(e), Some(expect));
        }
        assert_eq!(prod.coeff(9), None);
    }

    #[test]
    fn square_of_cot_head() {
        // (x^-1 - x/3)^2 with the x/3 term known exactly through x^1.
        let a = series(-1, &[(1, 1), (0, 1), (-1, 3)], 1);
        let sq = a.multiply(&a);
        assert_eq!(sq.valuation(), -2);
        assert_eq!(sq.truncation(), 0);
        assert_eq!(sq.coeff(-2), Some(q(1, 1)));
        assert_eq!(sq.coeff(0), Some(q(-2, 3)));
        // As exact polynomials the x^2/9 term appears too.
        let exact = series(-1, &[(1, 1), (0, 1), (-1, 3), (0, 1), (0, 1)], 3);
        let sq = exact.multiply(&exact);
        assert_eq!(sq.coeff(2), Some(q(1, 9)));
        assert_eq!(sq.coeff(1), Some(Rational::zero()));
    }

    #[test]
    fn invert_examples() {
        let inv = series(0, &[(1, 1), (-1, 1)], 6).invert().unwrap();
        for e in 0..=6 {
            assert_eq!(inv.coeff(e), Some(Rational::one()));
        }
        let inv_x = series(1, &[(1, 1)], 4).invert().unwrap();
        assert_eq!(inv_x.valuation(), -1);
        assert_eq!(inv_x.terms().count(), 1);

        // 1/sin via long division of x - x^3/6 + x^5/120.
        let sin = series(1, &[(1, 1), (0, 1), (-1, 6), (0, 1), (1, 120)], 5);
        let csc = sin.invert().unwrap();
        assert_eq!(csc.valuation(), -1);
        assert_eq!(csc.truncation(), 3);
        assert_eq!(csc.coeff(-1), Some(q(1, 1)));
        assert_eq!(csc.coeff(1), Some(q(1, 6)));
        assert_eq!(csc.coeff(3), Some(q(7, 360)));
    }

    #[test]
    fn singular_inverse() {
        let zero = series(0, &[], 3);
        assert_eq!(zero.invert(), Err(SeriesError::Singular));
        let k = Polynomial::variable(Indeterminate::K);
        let s = LaurentSeries::monomial(k, 0, 3);
        assert_eq!(s.invert(), Err(SeriesError::Singular));
    }

    #[test]
    fn promotion_into_polynomial_ring() {
        let a = series(-2, &[(1, 1), (0, 1), (1, 3)], 2).promote(Indeterminate::K);
        let k = Polynomial::variable(Indeterminate::K);
        let b = LaurentSeries::monomial(k.clone(), 1, 5);
        let prod = a.multiply(&b);
        assert_eq!(prod.coeff(-1), Some(k.clone()));
        assert_eq!(prod.coeff(1), Some(k.scale(&q(1, 3))));
    }
}

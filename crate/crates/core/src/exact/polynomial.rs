//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{common_denominator, ParseRationalError, Rational};

/// Name of the polynomial variable. Only used for display and to catch
/// accidental mixing of, say, a polynomial in `k` with one in `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Indeterminate {
    K,
    P,
    #[default]
    X,
    W,
}

impl Indeterminate {
    pub fn symbol(self) -> char {
        match self {
            Indeterminate::K => 'k',
            Indeterminate::P => 'p',
            Indeterminate::X => 'x',
            Indeterminate::W => 'w',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'k' => Some(Indeterminate::K),
            'p' => Some(Indeterminate::P),
            'x' => Some(Indeterminate::X),
            'w' => Some(Indeterminate::W),
            _ => None,
        }
    }
}

impl fmt::Display for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// `coeffs[i]` is the coefficient of `var^i`; the last entry is nonzero
/// (the zero polynomial has no entries).
///
/// Constants are compatible with every indeterminate. Combining two
/// non-constant polynomials in different indeterminates panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    var: Indeterminate,
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(var: Indeterminate, coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { var, coeffs };
        p.normalize();
        p
    }

    pub fn zero(var: Indeterminate) -> Self {
        Polynomial { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Indeterminate, c: Rational) -> Self {
        Polynomial::new(var, vec![c])
    }

    /// `c * var^exp`.
    pub fn monomial(var: Indeterminate, c: Rational, exp: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Polynomial::new(var, coeffs)
    }

    /// The polynomial `var`.
    pub fn variable(var: Indeterminate) -> Self {
        Polynomial::monomial(var, Rational::one(), 1)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, R>(var: Indeterminate, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, R)>,
        R: Into<Rational>,
    {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] += &c.into();
        }
        Polynomial::new(var, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn indeterminate(&self) -> Indeterminate {
        self.var
    }

    /// Same coefficients, renamed variable.
    pub fn with_indeterminate(mut self, var: Indeterminate) -> Self {
        self.var = var;
        self
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `var^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `var^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { var: self.var, coeffs }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Polynomial::constant(self.var, Rational::one());
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// `f(c * var)`.
    pub fn rescale_argument(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &power;
                power *= c;
                out
            })
            .collect();
        Polynomial::new(self.var, coeffs)
    }

    /// True when every nonzero coefficient sits at an even exponent.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == 0 || c.is_zero())
    }

    /// True when every nonzero coefficient sits at an odd exponent.
    pub fn is_odd(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == 1 || c.is_zero())
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let var = self.combined_var(divisor);
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.leading_coefficient().recip().expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().saturating_sub(dd);
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &(&c * d);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Polynomial::new(var, quot), Polynomial::new(var, rem))
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`,
    /// `g` monic (or zero when both inputs are zero).
    pub fn extended_gcd(&self, other: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
        let var = self.combined_var(other);
        let one = Polynomial::constant(var, Rational::one());
        let zero = Polynomial::zero(var);
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading_coefficient().recip() {
            Some(inv) => (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)),
            None => (r0, s0, t0),
        }
    }

    fn combined_var(&self, other: &Polynomial) -> Indeterminate {
        if self.var == other.var || other.is_constant() {
            self.var
        } else if self.is_constant() {
            other.var
        } else {
            panic!(
                "cannot combine a polynomial in {} with one in {}",
                self.var, other.var
            )
        }
    }

    /// Integer form: `(den, numerators)` with `self = Σ numerators[i] var^i / den`,
    /// `den > 0` minimal.
    pub fn cleared(&self) -> (BigInt, Vec<BigInt>) {
        let den = common_denominator(&self.coeffs);
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numerator() * (&den / c.denominator()))
            .collect();
        (den, nums)
    }

    /// Inverse of [`Polynomial::cleared`].
    pub fn from_cleared(var: Indeterminate, den: &BigInt, nums: &[BigInt]) -> Self {
        Polynomial::new(
            var,
            nums.iter()
                .map(|n| Rational::new(n.clone(), den.clone()))
                .collect(),
        )
    }
}

fn write_integer_terms(
    f: &mut fmt::Formatter<'_>,
    var: Indeterminate,
    nums: &[BigInt],
) -> fmt::Result {
    let mut first = true;
    for (e, c) in nums.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        match (first, c.is_negative()) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        let v = var.symbol();
        match (e, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "{v}")?,
            (1, false) => write!(f, "{mag}*{v}")?,
            (_, true) => write!(f, "{v}^{e}")?,
            (_, false) => write!(f, "{mag}*{v}^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Renders with denominators cleared, e.g. `(p^3 - p)/24`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (den, nums) = self.cleared();
        if den.is_one() {
            write_integer_terms(f, self.var, &nums)
        } else {
            write!(f, "(")?;
            write_integer_terms(f, self.var, &nums)?;
            write!(f, ")/{den}")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParsePolynomialError {
    #[error("malformed polynomial term `{0}`")]
    Term(String),
    #[error("polynomial mixes indeterminates `{0}` and `{1}`")]
    MixedVariables(char, char),
    #[error(transparent)]
    Coefficient(#[from] ParseRationalError),
    #[error("empty polynomial text")]
    Empty,
}

/// Parses the `Display` form; also accepts rational coefficients such as
/// `1/3*k^2 - 1/3`. A text without any variable is read as a constant in `x`.
impl FromStr for Polynomial {
    type Err = ParsePolynomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParsePolynomialError::Empty);
        }
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((body, den)) = rest.rsplit_once(")/") {
                let den: Rational = den.trim().parse()?;
                if den.is_zero() {
                    return Err(ParsePolynomialError::Term(s.to_string()));
                }
                let inner: Polynomial = body.parse()?;
                return Ok(inner.scale(&den.recip().expect("nonzero")));
            }
        }
        let mut var: Option<Indeterminate> = None;
        let mut terms: Vec<(usize, Rational)> = Vec::new();
        // Split on top-level `+`/`-` that separate terms (preceded by a space
        // in rendered output, or at the very start).
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut current = String::new();
        for token in s.split_whitespace() {
            match token {
                "+" | "-" => {
                    if current.is_empty() {
                        return Err(ParsePolynomialError::Term(s.to_string()));
                    }
                    chunks.push((negative, std::mem::take(&mut current)));
                    negative = token == "-";
                }
                t => current.push_str(t),
            }
        }
        if current.is_empty() {
            return Err(ParsePolynomialError::Term(s.to_string()));
        }
        chunks.push((negative, current));

        for (neg, chunk) in chunks {
            let (body, neg) = match chunk.strip_prefix('-') {
                Some(b) => (b.to_string(), !neg),
                None => (chunk, neg),
            };
            let bad = || ParsePolynomialError::Term(body.clone());
            let (coef_text, var_part) = match body.find(|c: char| c.is_ascii_alphabetic()) {
                None => (body.as_str(), None),
                Some(idx) => {
                    let coef = body[..idx].strip_suffix('*').unwrap_or(&body[..idx]);
                    if idx > 0 && !body[..idx].ends_with('*') {
                        return Err(bad());
                    }
                    (coef, Some(&body[idx..]))
                }
            };
            let mut coef = if coef_text.is_empty() {
                if var_part.is_none() {
                    return Err(bad());
                }
                Rational::one()
            } else {
                coef_text.parse::<Rational>()?
            };
            if neg {
                coef = -coef;
            }
            let exp = match var_part {
                None => 0,
                Some(vp) => {
                    let mut chars = vp.chars();
                    let c = chars.next().ok_or_else(bad)?;
                    let v = Indeterminate::from_symbol(c).ok_or_else(bad)?;
                    match var {
                        Some(existing) if existing != v => {
                            return Err(ParsePolynomialError::MixedVariables(existing.symbol(), c))
                        }
                        _ => var = Some(v),
                    }
                    let rest = chars.as_str();
                    if rest.is_empty() {
                        1
                    } else {
                        let digits = rest.strip_prefix('^').ok_or_else(bad)?;
                        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                            return Err(bad());
                        }
                        digits.parse::<usize>().map_err(|_| bad())?
                    }
                }
            };
            terms.push((exp, coef));
        }
        Ok(Polynomial::from_terms(var.unwrap_or_default(), terms))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let var = self.combined_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(var, coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let var = self.combined_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(var, coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let var = self.combined_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Polynomial::new(var, coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

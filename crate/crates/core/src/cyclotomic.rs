//! Root-of-unity sums `Σ_{ζ^p = 1, ζ ≠ 1} ζ^{g-1} / (ζ - 1)^{2g-2}`.
//!
//! The exact path works in `Q[x]/(Φ_p)` with `Φ_p = 1 + x + ... + x^{p-1}`,
//! where `x` stands for a primitive `p`-th root of unity. Summing over all
//! nontrivial roots is the field trace, and `Tr(x^i) = -1` for `p ∤ i`,
//! `Tr(1) = p - 1`.

use std::f64::consts::PI;

use crate::exact::{Indeterminate, Polynomial, Rational};
use crate::primes::is_odd_prime;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CyclotomicError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),
    #[error("genus must be at least 2, got {0}")]
    Genus(i64),
    #[error("root-of-unity sum has imaginary part {imag:e}, expected a real value")]
    NumericInstability { imag: f64 },
}

/// Canonical representative (degree < p - 1) of a class in `Q[x]/(Φ_p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicElement {
    p: usize,
    coeffs: Vec<Rational>,
}

impl CyclotomicElement {
    /// Reduces `poly` modulo `Φ_p`.
    pub fn from_polynomial(p: usize, poly: &Polynomial) -> Self {
        // Fold modulo x^p - 1 first, then remove the x^{p-1} component
        // using x^{p-1} ≡ -(1 + x + ... + x^{p-2}).
        let mut folded = vec![Rational::zero(); p];
        for (i, c) in poly.coefficients().iter().enumerate() {
            folded[i % p] += c;
        }
        let top = folded.pop().expect("p >= 1");
        for c in folded.iter_mut() {
            *c -= &top;
        }
        CyclotomicElement { p, coeffs: folded }
    }

    pub fn one(p: usize) -> Self {
        Self::from_polynomial(p, &Polynomial::constant(Indeterminate::X, Rational::one()))
    }

    /// The class of `x`, a primitive p-th root of unity.
    pub fn generator(p: usize) -> Self {
        Self::from_polynomial(p, &Polynomial::variable(Indeterminate::X))
    }

    pub fn modulus(&self) -> usize {
        self.p
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(Indeterminate::X, self.coeffs.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "mixing cyclotomic moduli");
        Self::from_polynomial(self.p, &(&self.to_polynomial() * &other.to_polynomial()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.p);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm against `Φ_p`; `None`
    /// only for zero (Φ_p is irreducible).
    pub fn inverse(&self) -> Option<Self> {
        let a = self.to_polynomial();
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.extended_gcd(&cyclotomic_polynomial(self.p));
        (g.degree() == Some(0)).then(|| Self::from_polynomial(self.p, &s))
    }

    /// Sum of the images under all `p - 1` embeddings.
    pub fn trace(&self) -> Rational {
        let p = Rational::from(self.p as i64);
        let mut acc = &self.coeffs[0] * &(p - Rational::one());
        for c in &self.coeffs[1..] {
            acc -= c;
        }
        acc
    }
}

/// `Φ_p = 1 + x + ... + x^{p-1}` for prime `p`.
pub fn cyclotomic_polynomial(p: usize) -> Polynomial {
    Polynomial::from_terms(Indeterminate::X, (0..p).map(|i| (i, 1)))
}

fn check_inputs(g: i64, p: i64) -> Result<(), CyclotomicError> {
    if !is_odd_prime(p) {
        return Err(CyclotomicError::NotOddPrime(p));
    }
    if g < 2 {
        return Err(CyclotomicError::Genus(g));
    }
    Ok(())
}

/// The inverse of `x - 1` in `Q[x]/(Φ_p)`.
pub fn inverse_of_x_minus_one(p: usize) -> CyclotomicElement {
    let x_minus_one = Polynomial::from_terms(Indeterminate::X, [(1, 1), (0, -1)]);
    CyclotomicElement::from_polynomial(p, &x_minus_one)
        .inverse()
        .expect("Φ_p(1) = p is nonzero")
}

/// `Σ_{ζ^p=1, ζ≠1} ζ^{g-1}/(ζ-1)^{2g-2}`, exactly.
pub fn zeta_sum_exact(g: i64, p: i64) -> Result<Rational, CyclotomicError> {
    check_inputs(g, p)?;
    let pu = p as usize;
    let e = (g - 1) as u32;
    let term = CyclotomicElement::generator(pu)
        .pow(e)
        .mul(&inverse_of_x_minus_one(pu).pow(2 * e));
    Ok(term.trace())
}

/// Largest accepted imaginary residue, relative to the real part.
pub const IMAGINARY_TOLERANCE: f64 = 1e-9;

/// The same sum in complex double precision.
pub fn zeta_sum_numeric(g: i64, p: i64) -> Result<f64, CyclotomicError> {
    check_inputs(g, p)?;
    let e = (g - 1) as i32;
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for j in 1..p {
        let angle = 2.0 * PI * j as f64 / p as f64;
        let (s, c) = angle.sin_cos();
        // ζ^{e} / (ζ - 1)^{2e}
        let (num_re, num_im) = ((e as f64 * angle).cos(), (e as f64 * angle).sin());
        let (dr, di) = (c - 1.0, s);
        let mod2 = dr * dr + di * di;
        // (ζ-1)^{-1} = conj(ζ-1)/|ζ-1|²
        let (ir, ii) = (dr / mod2, -di / mod2);
        let (mut pr, mut pi) = (1.0, 0.0);
        for _ in 0..2 * e {
            let t = pr * ir - pi * ii;
            pi = pr * ii + pi * ir;
            pr = t;
        }
        re += num_re * pr - num_im * pi;
        im += num_re * pi + num_im * pr;
    }
    // The sum is real; double-precision rounding leaves an imaginary
    // residue proportional to the magnitude of the terms.
    if im.abs() > IMAGINARY_TOLERANCE * re.abs().max(1.0) {
        return Err(CyclotomicError::NumericInstability { imag: im });
    }
    Ok(re)
}

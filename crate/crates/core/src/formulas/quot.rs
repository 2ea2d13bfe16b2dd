//! Numerical invariants of zero-dimensional Quot schemes.

use super::{FormulaError, GenusPrime};

/// Invariants of a generic stable bundle of rank `n`, degree `d` and its
/// rank-`r` subbundles.
///
/// `b` follows the `d = a·n - b`, `0 <= b < n` convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotProfile {
    pub n: i64,
    pub d: i64,
    pub r: i64,
    pub g: i64,
    pub a: i64,
    pub b: i64,
    pub e_max: i64,
    pub s_r: i64,
    pub epsilon: i64,
}

fn check_ranks(n: i64, r: i64, g: i64) -> Result<(), FormulaError> {
    if n < 2 {
        return Err(FormulaError::QuotData(format!("rank n = {n} must be >= 2")));
    }
    if r < 1 || r >= n {
        return Err(FormulaError::QuotData(format!("need 1 <= r < n, got r = {r}, n = {n}")));
    }
    if g < 2 {
        return Err(FormulaError::Genus(g));
    }
    Ok(())
}

/// `(a, b)` with `d = a·n - b`, `0 <= b < n`.
pub(crate) fn split_degree(d: i64, n: i64) -> (i64, i64) {
    let a = -(-d).div_euclid(n);
    (a, a * n - d)
}

/// Generic values: `s_r = r(n-r)(g-1) + ε`, `0 <= ε < n`, `s_r ≡ r·d (mod n)`
/// and `e_max = (d·r - s_r)/n`.
pub fn generic_quot_invariants(n: i64, d: i64, r: i64, g: i64) -> Result<QuotProfile, FormulaError> {
    check_ranks(n, r, g)?;
    let (a, b) = split_degree(d, n);
    let base = r * (n - r) * (g - 1);
    let epsilon = (r * d - base).rem_euclid(n);
    let s_r = base + epsilon;
    debug_assert_eq!((d * r - s_r) % n, 0);
    Ok(QuotProfile {
        n,
        d,
        r,
        g,
        a,
        b,
        e_max: (d * r - s_r) / n,
        s_r,
        epsilon,
    })
}

/// Profile of the Frobenius pushforward `F_*(L^∨)`: rank `p`, degree
/// `(p-2)(g-1)`, rank-2 subsheaves of degree 0.
pub fn frobenius_pushforward_profile(gp: &GenusPrime) -> Result<QuotProfile, FormulaError> {
    gp.require_hypothesis()?;
    let (g, p) = (gp.genus(), gp.prime());
    if !gp.joshi_range() {
        // b = 2(g-1) only holds below p; the override cannot help here.
        return Err(FormulaError::OutOfRange { g, p });
    }
    let profile = generic_quot_invariants(p, (p - 2) * (g - 1), 2, g)?;
    debug_assert_eq!(
        (profile.a, profile.b, profile.e_max, profile.epsilon),
        (g - 1, 2 * (g - 1), 0, 0)
    );
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest ε >= 0 with r(n-r)(g-1) + ε ≡ r·d (mod n), by search.
    fn brute_epsilon(n: i64, d: i64, r: i64, g: i64) -> i64 {
        (0..n)
            .find(|e| (r * (n - r) * (g - 1) + e - r * d).rem_euclid(n) == 0)
            .unwrap()
    }

    #[test]
    fn worked_profiles() {
        let p = generic_quot_invariants(3, 1, 2, 2).unwrap();
        assert_eq!((p.a, p.b, p.epsilon, p.s_r, p.e_max), (1, 2, 0, 2, 0));
        let p = generic_quot_invariants(5, 3, 2, 2).unwrap();
        assert_eq!((p.a, p.b, p.epsilon, p.s_r, p.e_max), (1, 2, 0, 6, 0));
        let p = generic_quot_invariants(2, 0, 1, 2).unwrap();
        assert_eq!((p.a, p.b, p.epsilon, p.s_r, p.e_max), (0, 0, 1, 2, -1));
    }

    #[test]
    fn invariants_hold_on_a_grid() {
        for n in 2..9 {
            for d in -20..20 {
                for r in 1..n {
                    for g in 2..5 {
                        let q = generic_quot_invariants(n, d, r, g).unwrap();
                        assert_eq!(q.d, q.a * n - q.b);
                        assert!((0..n).contains(&q.b));
                        assert_eq!(q.epsilon, brute_epsilon(n, d, r, g));
                        assert_eq!(q.s_r, r * (n - r) * (g - 1) + q.epsilon);
                        assert_eq!(q.e_max * n, d * r - q.s_r);
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_profiles() {
        let q = frobenius_pushforward_profile(&GenusPrime::new(2, 3).unwrap()).unwrap();
        assert_eq!((q.n, q.d, q.a, q.b), (3, 1, 1, 2));
        let q = frobenius_pushforward_profile(&GenusPrime::new(3, 7).unwrap()).unwrap();
        assert_eq!((q.n, q.d, q.a, q.b), (7, 10, 2, 4));
        let q = frobenius_pushforward_profile(&GenusPrime::new(2, 5).unwrap()).unwrap();
        assert_eq!(q.e_max, 0);
        assert_eq!(q.s_r, 2 * 3);
        let out = GenusPrime::new(4, 5).unwrap();
        assert!(frobenius_pushforward_profile(&out).is_err());
        assert!(frobenius_pushforward_profile(&out.allow_out_of_range(true)).is_err());
    }

    #[test]
    fn bad_ranks() {
        assert!(generic_quot_invariants(1, 0, 1, 2).is_err());
        assert!(generic_quot_invariants(3, 0, 3, 2).is_err());
        assert!(generic_quot_invariants(3, 0, 0, 2).is_err());
        assert!(generic_quot_invariants(3, 0, 1, 1).is_err());
    }
}

use proptest::prelude::*;

use dormant_core::exact::{bernoulli_numbers, Indeterminate, LaurentSeries, Polynomial, Rational};
use dormant_core::formulas::{degree_report, GenusPrime};
use dormant_core::trig::{v_polynomial, v_polynomial_at_truncation};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn series() -> impl Strategy<Value = LaurentSeries<Rational>> {
    (-3i64..=3, nonzero_rational(), prop::collection::vec(small_rational(), 0..6), 0i64..6).prop_map(
        |(start, lead, rest, extra)| {
            let mut coeffs = vec![lead];
            coeffs.extend(rest);
            LaurentSeries::from_rationals(start, coeffs, start + extra)
        },
    )
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 0..6).prop_map(|c| Polynomial::new(Indeterminate::P, c))
}

fn known_range(s: &LaurentSeries<Rational>) -> Vec<(i64, Rational)> {
    (s.valuation().min(s.truncation())..=s.truncation())
        .map(|e| (e, s.coeff(e).unwrap()))
        .collect()
}

proptest! {
    #[test]
    fn inverse_is_two_sided(a in series()) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(inv.valuation(), -a.valuation());
        for prod in [a.multiply(&inv), inv.multiply(&a)] {
            prop_assert!(prod.truncation() >= 0);
            for (e, c) in known_range(&prod) {
                let expect = if e == 0 { Rational::one() } else { Rational::zero() };
                prop_assert_eq!(c, expect);
            }
        }
    }

    #[test]
    fn multiplication_commutes_and_associates(a in series(), b in series(), c in series()) {
        let ab = a.multiply(&b);
        let ba = b.multiply(&a);
        prop_assert_eq!(ab.truncation(), ba.truncation());
        prop_assert_eq!(known_range(&ab), known_range(&ba));
        let left = ab.multiply(&c);
        let right = a.multiply(&b.multiply(&c));
        let t = left.truncation().min(right.truncation());
        for e in left.valuation().min(right.valuation())..=t {
            prop_assert_eq!(left.coeff(e), right.coeff(e));
        }
    }

    #[test]
    fn evaluation_is_additive(f in polynomial(), g in polynomial(), t in small_rational()) {
        prop_assert_eq!((&f + &g).evaluate(&t), f.evaluate(&t) + g.evaluate(&t));
    }

    #[test]
    fn rational_text_round_trip(r in (any::<i64>(), 1i64..i64::MAX)) {
        let x = Rational::new(r.0, r.1);
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
    }

    #[test]
    fn polynomial_text_round_trip(f in polynomial()) {
        let back: Polynomial = f.to_string().parse().unwrap();
        // A constant renders without its variable name.
        prop_assert_eq!(back.coefficients(), f.coefficients());
    }
}

#[test]
fn odd_bernoulli_numbers_vanish() {
    let t = bernoulli_numbers(64);
    for j in (3..64).step_by(2) {
        assert!(t.get(j).unwrap().is_zero());
    }
}

#[test]
fn v_polynomial_shape() {
    for n in 0..=8u32 {
        let v = v_polynomial(n);
        assert_eq!(v.evaluate(&Rational::one()), Rational::zero(), "n = {n}");
        if n >= 1 {
            assert_eq!(v.poly.degree(), Some(2 * n as usize));
            assert!(v.poly.is_even());
            for extra in [1, 4, 9] {
                assert_eq!(v_polynomial_at_truncation(n, 2 * i64::from(n) + 2 + extra), v);
            }
        }
    }
}

#[test]
fn report_json_round_trip() {
    for (g, p) in [(2, 3), (3, 7), (10, 19)] {
        let report = degree_report(&GenusPrime::new(g, p).unwrap()).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        assert!(!text.contains('.'), "no floats: {text}");
        let back = serde_json::from_str(&text).unwrap();
        assert_eq!(report, back);
    }
}

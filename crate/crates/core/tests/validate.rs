use std::time::Duration;

use dormant_core::exact::Rational;
use dormant_core::trig::{v_numeric, v_polynomial};
use dormant_core::validate::validate_suite;

#[test]
fn full_desk_scale_sweep() {
    let outcome = validate_suite(10, 31);
    assert!(outcome.passed(), "{:#?}", outcome.failures);
    assert!(outcome.cases_run > 900);
    assert!(outcome.wall_time < Duration::from_secs(30), "{:?}", outcome.wall_time);
}

#[test]
fn v_polynomial_tracks_float_sums() {
    for n in 1..=8u32 {
        let v = v_polynomial(n);
        for k in 2..=31 {
            let exact = v.evaluate(&Rational::from(k)).to_f64();
            let float = v_numeric(n, k).unwrap();
            assert!((exact - float).abs() / float <= 1e-8, "n={n} k={k}: {exact} vs {float}");
        }
    }
}

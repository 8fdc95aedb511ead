//! The inference engine and the supervisor against brute-force reference implementations.

mod common;

use common::*;
use nanogrid::ems::FlcController;
use nanogrid::fuzzy::FuzzyError;
use nanogrid::NanogridParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Frozen from the reference supervisor (1e6-sample centroids).
const GOLDEN_PLUS_MID: f64 = 0.083625;
const GOLDEN_MINUS_MID: f64 = -0.0375;
const GOLDEN_PLUS_025_050: f64 = 0.112_180_913_869;
const GOLDEN_MINUS_080_030: f64 = -0.034_270_373_463;

// Three centroids, each within 1e-4 of the span, divided by c1 - c0 (about 0.6 of the span).
const CALIBRATED_TOL: f64 = 6e-4;

fn flc() -> FlcController {
    FlcController::new(NanogridParams::default()).unwrap()
}

#[test]
fn randomized_systems_match_reference_centroid() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f022);
    let mut worst: f64 = 0.0;
    for (sys, x, expected) in random_cases(&mut rng, 100) {
        let got = sys.to_library().infer(x[0], x[1]).unwrap();
        let err = (got - expected).abs() / sys.width();
        worst = worst.max(err);
        assert!(err <= 1e-4, "x={x:?} got {got} expected {expected} ({err:e} of width)\n{sys:#?}");
    }
    println!("worst relative centroid error {worst:e}");
}

#[test]
fn no_rule_firing_is_an_error_in_both() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut seen = 0;
    while seen < 20 {
        let sys = random_system(&mut rng, false);
        let x = [
            rng.random_range(sys.inputs[0].0..=sys.inputs[0].1),
            rng.random_range(sys.inputs[1].0..=sys.inputs[1].1),
        ];
        if sys.term_activations(x).iter().all(|&a| a == 0.0) {
            assert!(sys.infer(x).is_none());
            assert_eq!(sys.to_library().infer(x[0], x[1]), Err(FuzzyError::EmptyAggregate));
            seen += 1;
        }
    }
}

#[test]
fn supervisor_goldens_from_reference() {
    let top = supervisor(SHIFT_PLUS_MAX);
    let bottom = supervisor(SHIFT_MINUS_MAX);
    assert!((supervisor_shift(&top, 0.5, 0.5) - GOLDEN_PLUS_MID).abs() < 1e-9);
    assert!((-supervisor_shift(&bottom, 0.5, 0.5) - GOLDEN_MINUS_MID).abs() < 1e-9);
    assert!((supervisor_shift(&top, 0.25, 0.5) - GOLDEN_PLUS_025_050).abs() < 1e-9);
    assert!((-supervisor_shift(&bottom, 0.8, 0.3) - GOLDEN_MINUS_080_030).abs() < 1e-9);
}

#[test]
fn supervisor_matches_goldens() {
    let c = flc();
    let tol_plus = CALIBRATED_TOL * SHIFT_PLUS_MAX;
    let tol_minus = CALIBRATED_TOL * SHIFT_MINUS_MAX;
    assert!((c.shift_plus(0.5, 0.5).unwrap() - GOLDEN_PLUS_MID).abs() < tol_plus);
    assert!((c.shift_minus(0.5, 0.5).unwrap() - GOLDEN_MINUS_MID).abs() < tol_minus);
    assert!((c.shift_plus(0.25, 0.5).unwrap() - GOLDEN_PLUS_025_050).abs() < tol_plus);
    assert!((c.shift_minus(0.8, 0.3).unwrap() - GOLDEN_MINUS_080_030).abs() < tol_minus);
}

#[test]
fn supervisor_matches_reference_on_random_inputs() {
    let c = flc();
    let top = supervisor(SHIFT_PLUS_MAX);
    let bottom = supervisor(SHIFT_MINUS_MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..40 {
        let (a, b) = (rng.random_range(0.0..=1.0), rng.random_range(0.0..=1.0));
        let plus = c.shift_plus(a, b).unwrap();
        let minus = c.shift_minus(a, b).unwrap();
        let want_plus = supervisor_shift(&top, a, b);
        let want_minus = -supervisor_shift(&bottom, a, b);
        assert!((plus - want_plus).abs() < CALIBRATED_TOL * SHIFT_PLUS_MAX, "({a}, {b}): {plus} vs {want_plus}");
        assert!((minus - want_minus).abs() < CALIBRATED_TOL * SHIFT_MINUS_MAX, "({a}, {b}): {minus} vs {want_minus}");
    }
}

#[test]
fn calibrated_corners_are_exact() {
    let c = flc();
    let p = NanogridParams::default();
    for x in [0.0, 0.3, 0.5, 0.77, 1.0] {
        assert_eq!(c.shift_plus(0.0, x).unwrap(), p.shift_plus_max());
        assert_eq!(c.shift_plus(x, 0.0).unwrap(), p.shift_plus_max());
        assert_eq!(c.shift_minus(0.0, x).unwrap(), -p.shift_minus_max());
        assert_eq!(c.shift_minus(x, 0.0).unwrap(), -p.shift_minus_max());
    }
    assert_eq!(c.shift_plus(1.0, 1.0).unwrap(), 0.0);
    assert_eq!(c.shift_minus(1.0, 1.0).unwrap(), 0.0);
    assert_eq!(p.shift_plus_max(), 0.75e-4 * 2230.0);
    assert!((p.shift_plus_max() - 0.167250).abs() < 1e-15);
    assert!((p.shift_minus_max() - 0.075).abs() < 1e-15);
}

use std::f64::consts::PI;

use relctx::contextuality::{
    chsh_value, excited_observables, hydrogen_chsh, hydrogen_density, kappa_positive_lower_bound,
    optimal_xi, peres_mermin_value, CHSH_BOUND,
};
use relctx::spindensity::random_pure_spinors;
use relctx::{QuadratureSpec, QuantumNumbers, ReducedSpinDensity, FINE_STRUCTURE};

const SCAN: usize = 720;

#[test]
fn every_state_up_to_n5_violates_and_matches_closed_form() {
    let spec = QuadratureSpec::default();
    for qn in QuantumNumbers::enumerate(5) {
        let rho = hydrogen_density(&qn, FINE_STRUCTURE, &spec).unwrap();
        let closed = optimal_xi(&qn, FINE_STRUCTURE).unwrap();
        let report = hydrogen_chsh(&rho, &qn, FINE_STRUCTURE, None).unwrap();
        let rel = (report.value - closed.value_star).abs() / closed.value_star;
        assert!(rel < 1e-8, "{qn}: {} vs {} (rel {rel:e})", report.value, closed.value_star);
        assert!(report.value > CHSH_BOUND && report.violated, "{qn}");
        if qn.kappa > 0 {
            let lb = kappa_positive_lower_bound(qn.l(), FINE_STRUCTURE);
            assert!(report.value > lb, "{qn}: {} <= {lb}", report.value);
        }

        let best = (0..SCAN)
            .map(|k| {
                let xi = -PI + 2.0 * PI * k as f64 / SCAN as f64;
                chsh_value(&rho, &excited_observables(xi)).unwrap().value
            })
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(best <= report.value + 1e-6, "{qn}: scan {best} above optimum {}", report.value);
        assert!(report.value - best < 1e-4, "{qn}: scan {best} far from optimum {}", report.value);
    }
}

#[test]
fn closed_form_tracks_numeric_value_away_from_optimum() {
    let spec = QuadratureSpec::default();
    for qn in QuantumNumbers::enumerate(3) {
        let rho = hydrogen_density(&qn, FINE_STRUCTURE, &spec).unwrap();
        let closed = optimal_xi(&qn, FINE_STRUCTURE).unwrap();
        for xi in [-2.5, -1.0, 0.0, 0.3, 1.7, 3.0] {
            let numeric = chsh_value(&rho, &excited_observables(xi)).unwrap().value;
            assert!((numeric - closed.value_at(xi)).abs() < 1e-8, "{qn} xi={xi}");
        }
    }
}

#[test]
fn peres_mermin_value_is_state_independent() {
    let values: Vec<f64> = random_pure_spinors(7, 100)
        .iter()
        .map(|psi| {
            let rho = ReducedSpinDensity::from_pure(psi, "random").unwrap();
            peres_mermin_value(&rho).unwrap().value
        })
        .collect();
    let (lo, hi) = values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
    assert!(hi - lo < 1e-10, "spread {}", hi - lo);
    assert!((lo - 6.0).abs() < 1e-10);
    let mixed = peres_mermin_value(&ReducedSpinDensity::maximally_mixed()).unwrap();
    assert!((mixed.value - 6.0).abs() < 1e-12);
    assert_eq!(mixed.bound, 4.0);
}

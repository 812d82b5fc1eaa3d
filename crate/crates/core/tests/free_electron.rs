use relctx::clifford::ComplexMatrix4;
use relctx::freeparticle::{
    energy_split, free_chsh, free_hamiltonian, free_observables, free_state, hydrogen_spectrum,
};
use relctx::FINE_STRUCTURE;

const GRID: usize = 1000;
const BETA_MAX: f64 = 0.999;

fn grid() -> impl Iterator<Item = f64> {
    (0..GRID).map(|k| BETA_MAX * k as f64 / (GRID - 1) as f64)
}

#[test]
fn curve_matches_closed_form_and_decreases() {
    let mut prev = f64::INFINITY;
    for b in grid() {
        let v = free_chsh(b).unwrap().value;
        let expect = 2.0 * (2.0 - b * b).sqrt();
        assert!((v - expect).abs() < 1e-12, "beta={b}: {v} vs {expect}");
        assert!(v > 2.0, "beta={b}");
        assert!(v < prev, "beta={b}: not decreasing");
        prev = v;
    }
    assert!((free_chsh(0.0).unwrap().value - 2.0 * 2f64.sqrt()).abs() < 1e-15);
}

#[test]
fn projectors_commute_with_hamiltonian_and_complete() {
    for b in [0.0, 0.3, 0.5, 0.9, 0.999] {
        let obs = free_observables(b).unwrap();
        let split = energy_split(b, &obs[1]).unwrap();
        let k = free_state(b, 1).unwrap().k;
        let h = free_hamiltonian(k);
        assert!(split.positive.commutator(&h).frobenius_norm() < 1e-12);
        assert!(split.negative.commutator(&h).frobenius_norm() < 1e-12);
        let sum = split.positive + split.negative;
        assert!(sum.approx_eq(&ComplexMatrix4::identity(), 1e-12));
        for w in &split.eigenvectors {
            assert!((0.0..=1.0).contains(&w.negative_weight));
        }
    }
}

#[test]
fn positive_energy_state_has_no_negative_weight() {
    for b in [0.0, 0.5, 0.99] {
        for h in [1, -1] {
            let st = free_state(b, h).unwrap();
            let split = energy_split(b, &free_observables(b).unwrap()[0]).unwrap();
            assert!(split.negative_weight_of(&st.spinor) < 1e-12, "beta={b} helicity={h}");
        }
    }
}

#[test]
fn observables_mix_energy_signs_at_half_light_speed() {
    for (k, obs) in free_observables(0.5).unwrap().iter().enumerate() {
        let split = energy_split(0.5, obs).unwrap();
        assert!(split.mixes_energy_signs(), "observable {k}");
        assert!(split
            .eigenvectors
            .iter()
            .any(|w| w.negative_weight > 1e-10 && w.negative_weight < 1.0 - 1e-10));
    }
}

#[test]
fn bound_spectrum_is_positive() {
    let spectrum = hydrogen_spectrum(10, FINE_STRUCTURE).unwrap();
    assert_eq!(spectrum.len(), (1..=10).map(|n| 2 * n - 1).sum::<usize>());
    assert!(spectrum.iter().all(|&(_, _, mu)| mu > 0.0 && mu < 1.0));
}

use num_complex::Complex64;
use proptest::prelude::*;
use relctx::clifford::{build_family, direction_observable, ComplexMatrix4, Family};
use relctx::contextuality::hydrogen_density;
use relctx::hydrogen::eigenstate;
use relctx::spindensity::{correlator, random_pure_spinors, reduce};
use relctx::{QuadratureSpec, QuantumNumbers, ReducedSpinDensity, FINE_STRUCTURE};

fn unit(theta: f64, phi: f64) -> [f64; 3] {
    [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()]
}

#[test]
fn eigenstate_densities_are_block_diagonal() {
    let spec = QuadratureSpec::default();
    for qn in QuantumNumbers::enumerate(4) {
        let rho = hydrogen_density(&qn, FINE_STRUCTURE, &spec).unwrap();
        assert!(rho.off_block_norm() < 1e-8, "{qn}: {}", rho.off_block_norm());
        rho.check_invariants(1e-10).unwrap();
    }
}

#[test]
fn reduction_is_deterministic() {
    let spec = QuadratureSpec::default();
    let qn = QuantumNumbers::new(3, -2, -3).unwrap();
    let field = eigenstate(&qn, FINE_STRUCTURE).unwrap();
    let a = reduce(&field, &spec).unwrap();
    let b = reduce(&field, &spec).unwrap();
    assert_eq!(a.matrix, b.matrix);
}

proptest! {
    #[test]
    fn phase_invariance_for_random_spinors(seed in any::<u64>(), phase in -3.2f64..3.2) {
        let psi = random_pure_spinors(seed, 1)[0];
        let z = Complex64::from_polar(1.0, phase);
        let a = ReducedSpinDensity::from_pure(&psi, "a").unwrap();
        let b = ReducedSpinDensity::from_pure(&psi.map(|c| c * z), "b").unwrap();
        prop_assert!(a.matrix.approx_eq(&b.matrix, 1e-14));
    }

    #[test]
    fn correlator_with_identity_is_bounded(
        seed in any::<u64>(),
        fam in 0usize..4,
        theta in 0.0f64..std::f64::consts::PI,
        phi in 0.0f64..std::f64::consts::TAU,
    ) {
        let psi = random_pure_spinors(seed, 1)[0];
        let rho = ReducedSpinDensity::from_pure(&psi, "random").unwrap();
        let obs = direction_observable(&build_family(Family::ALL[fam]), unit(theta, phi)).unwrap();
        let c = correlator(&rho, &obs, &ComplexMatrix4::identity()).unwrap();
        prop_assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&c));
    }
}

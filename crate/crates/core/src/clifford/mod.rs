//! Dirac gamma matrices and the commuting observable families built on them.
//!
//! Gamma matrices are given in the Weyl basis:
//!
//! ```text
//! g0 = [[0, 1], [1, 0]],   gk = [[0, s_k], [-s_k, 0]],   g5 = i g0 g1 g2 g3
//! ```
//!
//! Four families of dichotomic observables are provided. `Sigma = 1 (x) sigma`
//! and `SigmaPrime = sigma (x) 1` act on the two tensor factors; `Gamma` and
//! `GammaPrime` are built from gamma matrices and commute componentwise with
//! each other. Spinor states elsewhere in the crate use the Dirac
//! representation (`beta = diag(1, 1, -1, -1)`); [`weyl_from_dirac`] relates
//! the two.

mod audit;
mod exact;
mod matrix;

pub use audit::{audit_algebra, AlgebraAudit, AuditCheck};
pub use exact::{ExactMatrix4, GaussInt};
pub use matrix::{inner, ComplexMatrix4, Spinor4};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

type Exact2 = [[GaussInt; 2]; 2];

const O: GaussInt = GaussInt::ZERO;
const P: GaussInt = GaussInt::ONE;
const M: GaussInt = GaussInt::new(-1, 0);
const I: GaussInt = GaussInt::I;
const MI: GaussInt = GaussInt::new(0, -1);

pub(crate) const PAULI_I: Exact2 = [[P, O], [O, P]];
pub(crate) const PAULI_X: Exact2 = [[O, P], [P, O]];
pub(crate) const PAULI_Y: Exact2 = [[O, MI], [I, O]];
pub(crate) const PAULI_Z: Exact2 = [[P, O], [O, M]];
const ZERO2: Exact2 = [[O, O], [O, O]];

fn neg2(a: Exact2) -> Exact2 {
    a.map(|row| row.map(|z| -z))
}

/// Exact gamma matrix for `index` in `{0, 1, 2, 3, 5}`.
pub fn exact_gamma(index: u8) -> Result<ExactMatrix4> {
    let spatial = |s: Exact2| ExactMatrix4::from_blocks([[ZERO2, s], [neg2(s), ZERO2]]);
    match index {
        0 => Ok(ExactMatrix4::from_blocks([[ZERO2, PAULI_I], [PAULI_I, ZERO2]])),
        1 => Ok(spatial(PAULI_X)),
        2 => Ok(spatial(PAULI_Y)),
        3 => Ok(spatial(PAULI_Z)),
        5 => {
            let g = [0u8, 1, 2, 3].map(|k| exact_gamma(k).expect("valid index"));
            Ok((g[0] * g[1] * g[2] * g[3]).scale(GaussInt::I))
        }
        _ => Err(Error::arg(format!(
            "gamma matrix index must be one of 0, 1, 2, 3, 5 (got {index})"
        ))),
    }
}

/// Weyl-basis gamma matrix as a floating matrix.
pub fn gamma_matrix(index: u8) -> Result<ComplexMatrix4> {
    exact_gamma(index).map(|g| g.to_complex())
}

/// `alpha_k = sigma_x (x) sigma_k`, Dirac representation.
pub fn alpha(axis: usize) -> ComplexMatrix4 {
    let s = [PAULI_X, PAULI_Y, PAULI_Z][axis];
    ExactMatrix4::kron(PAULI_X, s).to_complex()
}

/// `beta = sigma_z (x) 1`, Dirac representation.
pub fn beta() -> ComplexMatrix4 {
    ExactMatrix4::kron(PAULI_Z, PAULI_I).to_complex()
}

/// Unitary taking Dirac-representation spinors to the Weyl basis used by
/// [`gamma_matrix`]: `((1 - i sigma_y) / sqrt 2) (x) 1`.
pub fn weyl_from_dirac() -> ComplexMatrix4 {
    let rot: Exact2 = [[P, M], [P, P]];
    ExactMatrix4::kron(rot, PAULI_I)
        .to_complex()
        .scale_real(std::f64::consts::FRAC_1_SQRT_2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Gamma,
    GammaPrime,
    Sigma,
    SigmaPrime,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Gamma,
        Family::GammaPrime,
        Family::Sigma,
        Family::SigmaPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gamma => "Gamma",
            Family::GammaPrime => "GammaPrime",
            Family::Sigma => "Sigma",
            Family::SigmaPrime => "SigmaPrime",
        }
    }
}

/// Exact `(x, y, z)` components of a family.
pub fn exact_family(label: Family) -> [ExactMatrix4; 3] {
    let g = |k| exact_gamma(k).expect("valid index");
    let i = GaussInt::I;
    match label {
        Family::Gamma => [g(0), g(2) * g(0), g(2).scale(i)],
        Family::GammaPrime => [g(3) * g(5), (g(3) * g(1)).scale(i), g(5) * g(1)],
        Family::Sigma => [PAULI_X, PAULI_Y, PAULI_Z].map(|s| ExactMatrix4::kron(PAULI_I, s)),
        Family::SigmaPrime => [PAULI_X, PAULI_Y, PAULI_Z].map(|s| ExactMatrix4::kron(s, PAULI_I)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObservableTriple {
    pub x: ComplexMatrix4,
    pub y: ComplexMatrix4,
    pub z: ComplexMatrix4,
    pub label: Family,
}

impl ObservableTriple {
    pub fn components(&self) -> [ComplexMatrix4; 3] {
        [self.x, self.y, self.z]
    }
}

pub fn build_family(label: Family) -> ObservableTriple {
    let [x, y, z] = exact_family(label).map(|m| m.to_complex());
    ObservableTriple { x, y, z, label }
}

/// `n . family` for a unit vector `n`.
pub fn direction_observable(family: &ObservableTriple, n: [f64; 3]) -> Result<ComplexMatrix4> {
    let norm = n.iter().map(|c| c * c).sum::<f64>().sqrt();
    if !norm.is_finite() || (norm - 1.0).abs() > 1e-12 {
        return Err(Error::arg(format!(
            "direction must be a unit vector (|n| = {norm})"
        )));
    }
    Ok(family.x.scale_real(n[0]) + family.y.scale_real(n[1]) + family.z.scale_real(n[2]))
}

/// Exact Peres-Mermin grid built from `Sigma` and `SigmaPrime`.
pub fn exact_peres_mermin_grid() -> [[ExactMatrix4; 3]; 3] {
    let [sx, sy, sz] = exact_family(Family::Sigma);
    let [px, py, pz] = exact_family(Family::SigmaPrime);
    [
        [pz, sz, sz * pz],
        [sx, px, sx * px],
        [pz * sx, px * sz, sy * py],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    #[test]
    fn gamma0_has_identity_off_diagonal_blocks() {
        let g0 = gamma_matrix(0).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if (i + 2) % 4 == j { 1.0 } else { 0.0 };
                assert_eq!(g0.entries[i][j], Complex64::new(want, 0.0));
            }
        }
    }

    #[test]
    fn gamma5_is_block_diagonal_minus_plus() {
        let g5 = gamma_matrix(5).unwrap();
        assert_eq!(g5, ComplexMatrix4::from_real_diagonal([-1.0, -1.0, 1.0, 1.0]));
    }

    #[test]
    fn spatial_gammas_anticommute() {
        for i in 1..=3u8 {
            for j in 1..=3u8 {
                let (gi, gj) = (exact_gamma(i).unwrap(), exact_gamma(j).unwrap());
                let ac = gi.anticommutator(&gj);
                if i == j {
                    assert_eq!(gi * gi, -ExactMatrix4::identity());
                } else {
                    assert!(ac.is_zero(), "g{i} g{j}");
                }
            }
            assert!(exact_gamma(0).unwrap().anticommutator(&exact_gamma(i).unwrap()).is_zero());
        }
        let g0 = exact_gamma(0).unwrap();
        assert_eq!(g0 * g0, ExactMatrix4::identity());
        assert!(g0.commutator(&g0).is_zero());
    }

    #[test]
    fn invalid_gamma_index_is_rejected() {
        assert!(matches!(gamma_matrix(4), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn gamma_family_x_is_gamma0() {
        assert_eq!(build_family(Family::Gamma).x, gamma_matrix(0).unwrap());
    }

    #[test]
    fn gamma_and_gamma_prime_commute() {
        for a in exact_family(Family::Gamma) {
            for b in exact_family(Family::GammaPrime) {
                assert!(a.commutator(&b).is_zero());
            }
        }
    }

    #[test]
    fn sigma_squares_sum_to_three() {
        let s = build_family(Family::Sigma);
        let sum = s.x * s.x + s.y * s.y + s.z * s.z;
        assert_eq!(sum, ComplexMatrix4::identity().scale_real(3.0));
    }

    #[test]
    fn weyl_transform_maps_beta_to_gamma0() {
        let u = weyl_from_dirac();
        assert!(beta().conjugate_by(&u).approx_eq(&gamma_matrix(0).unwrap(), 1e-15));
        for k in 1..=3 {
            let dirac_gk = beta() * alpha(k - 1);
            let weyl = dirac_gk.conjugate_by(&u);
            assert!(weyl.approx_eq(&gamma_matrix(k as u8).unwrap(), 1e-15));
        }
    }

    #[test]
    fn basis_direction_returns_component() {
        let g = build_family(Family::Gamma);
        assert_eq!(direction_observable(&g, [1.0, 0.0, 0.0]).unwrap(), g.x);
    }

    #[test]
    fn non_unit_direction_is_rejected() {
        let g = build_family(Family::Gamma);
        assert!(direction_observable(&g, [1.0, 1.0, 0.0]).is_err());
        assert!(direction_observable(&g, [0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn tilted_gamma_prime_direction_is_involution() {
        let gp = build_family(Family::GammaPrime);
        for k in 0..64 {
            let theta = k as f64 * 0.1;
            let obs = direction_observable(&gp, [theta.cos(), 0.0, -theta.sin()]).unwrap();
            assert!(obs.is_involution(1e-12));
        }
    }

    proptest! {
        #[test]
        fn direction_observables_are_hermitian_involutions(
            u in -1.0f64..1.0,
            phi in 0.0f64..std::f64::consts::TAU,
            fam in 0usize..4,
        ) {
            let s = (1.0 - u * u).sqrt();
            let n = [s * phi.cos(), s * phi.sin(), u];
            let norm = n.iter().map(|c| c * c).sum::<f64>().sqrt();
            let n = n.map(|c| c / norm);
            let obs = direction_observable(&build_family(Family::ALL[fam]), n).unwrap();
            prop_assert!(obs.is_hermitian(1e-12));
            prop_assert!(obs.is_involution(1e-12));
        }
    }
}

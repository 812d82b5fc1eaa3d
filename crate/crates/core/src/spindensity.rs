//! Spin density matrices obtained by integrating out the spatial dependence.
//!
//! Every observable used by the inequalities is a constant 4x4 matrix, so
//! `<psi| O |psi> = tr(rho_spin O)` with `rho_spin = int psi psi^dagger d^3r`.
//! One quadrature pass per state serves every correlator.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::clifford::{ComplexMatrix4, Spinor4};
use crate::error::{Error, Result};
use crate::hydrogen::{sommerfeld_mu, QuantumNumbers, RadialSolution, SpinorField};
use crate::specfun::{quadrature_nodes, QuadratureSpec};

/// Tolerance for the density invariants (hermiticity, unit trace, positivity).
pub const DENSITY_TOL: f64 = 1e-10;
/// A reduced trace further than this from 1 means the quadrature failed.
pub const TRACE_FAILURE: f64 = 1e-6;
/// Frobenius norm above which two observables are treated as incompatible.
pub const COMMUTATOR_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReducedSpinDensity {
    pub matrix: ComplexMatrix4,
    pub source: String,
    pub spec: Option<QuadratureSpec>,
}

impl ReducedSpinDensity {
    /// Validates hermiticity, unit trace and positivity within [`DENSITY_TOL`].
    pub fn from_matrix(matrix: ComplexMatrix4, source: impl Into<String>) -> Result<Self> {
        let rho = ReducedSpinDensity {
            matrix,
            source: source.into(),
            spec: None,
        };
        rho.check_invariants(DENSITY_TOL)?;
        Ok(rho)
    }

    /// `|psi><psi| / <psi|psi>`.
    pub fn from_pure(psi: &Spinor4, source: impl Into<String>) -> Result<Self> {
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if !(norm2 > 0.0 && norm2.is_finite()) {
            return Err(Error::arg("pure state must have nonzero finite norm"));
        }
        let m = ComplexMatrix4::outer(psi, psi).scale_real(1.0 / norm2);
        Self::from_matrix(m, source)
    }

    pub fn maximally_mixed() -> Self {
        ReducedSpinDensity {
            matrix: ComplexMatrix4::identity().scale_real(0.25),
            source: "maximally mixed".into(),
            spec: None,
        }
    }

    pub fn check_invariants(&self, tol: f64) -> Result<()> {
        let m = &self.matrix;
        if !m.is_hermitian(tol) {
            return Err(Error::Numerical(format!("{}: density not hermitian", self.source)));
        }
        let tr = m.trace();
        if (tr - 1.0).norm() > tol {
            return Err(Error::Numerical(format!("{}: trace {tr} != 1", self.source)));
        }
        let (vals, _) = m.eigh();
        if vals[0] < -tol {
            return Err(Error::Numerical(format!(
                "{}: negative eigenvalue {}",
                self.source, vals[0]
            )));
        }
        Ok(())
    }

    /// `U rho U^dagger`: re-expresses the state in another spinor basis.
    pub fn transformed(&self, u: &ComplexMatrix4) -> Self {
        ReducedSpinDensity {
            matrix: self.matrix.conjugate_by(u),
            source: self.source.clone(),
            spec: self.spec,
        }
    }

    /// `tr(rho O)`, real part.
    pub fn expectation(&self, op: &ComplexMatrix4) -> f64 {
        (self.matrix * *op).trace().re
    }

    /// Largest entry of the upper/lower off-diagonal 2x2 blocks.
    pub fn off_block_norm(&self) -> f64 {
        let mut acc = 0.0f64;
        for i in 0..2 {
            for j in 2..4 {
                acc = acc
                    .max(self.matrix.entries[i][j].norm())
                    .max(self.matrix.entries[j][i].norm());
            }
        }
        acc
    }
}

/// `rho_spin[u][v] = int psi_u conj(psi_v) r^2 sin(theta) dr dtheta dphi`
/// over the tensor-product rule of `spec`.
pub fn reduce(state: &SpinorField, spec: &QuadratureSpec) -> Result<ReducedSpinDensity> {
    spec.validate_for(state.qn.l_max())?;
    let nodes = quadrature_nodes(spec, spec.cutoff_for(state.qn.n));
    let angular: Vec<_> = nodes
        .cos_theta
        .iter()
        .flat_map(|&(x, wx)| {
            let theta = x.acos();
            nodes
                .phi
                .iter()
                .map(move |&(phi, wp)| (theta, phi, wx * wp))
        })
        .map(|(theta, phi, w)| (state.angular_part(theta, phi), w))
        .collect();
    // r^2 dr expressed in rho
    let s = state.radial.rho_per_r;
    let jac = s.powi(-3);

    let mut acc = [[Complex64::new(0.0, 0.0); 4]; 4];
    for &(rho, wr) in &nodes.radial {
        let radial = state.radial_part(rho);
        let wr = wr * rho * rho * jac;
        for &(ang, wa) in &angular {
            let psi = SpinorField::combine(radial, ang);
            let w = wr * wa;
            for u in 0..4 {
                for v in 0..4 {
                    acc[u][v] += psi[u] * psi[v].conj() * w;
                }
            }
        }
    }
    let matrix = ComplexMatrix4::from_rows(acc);
    let tr = matrix.trace();
    if (tr - 1.0).norm() > TRACE_FAILURE {
        return Err(Error::Numerical(format!(
            "quadrature did not converge for {}: trace = {tr}",
            state.qn
        )));
    }
    Ok(ReducedSpinDensity {
        matrix,
        source: state.qn.to_string(),
        spec: Some(*spec),
    })
}

/// Fails with [`Error::ContractViolation`] unless `o1`, `o2` are hermitian and
/// commute within [`COMMUTATOR_TOL`].
pub fn check_compatible(o1: &ComplexMatrix4, o2: &ComplexMatrix4) -> Result<()> {
    if !o1.is_hermitian(COMMUTATOR_TOL) || !o2.is_hermitian(COMMUTATOR_TOL) {
        return Err(Error::ContractViolation("observable is not hermitian".into()));
    }
    let c = o1.commutator(o2).frobenius_norm();
    if c > COMMUTATOR_TOL {
        return Err(Error::ContractViolation(format!(
            "observables do not commute (|[O1, O2]| = {c:.3e})"
        )));
    }
    Ok(())
}

/// `<O1 O2> = tr(rho O1 O2)` for a compatible pair.
pub fn correlator(rho: &ReducedSpinDensity, o1: &ComplexMatrix4, o2: &ComplexMatrix4) -> Result<f64> {
    check_compatible(o1, o2)?;
    let v = (rho.matrix * *o1 * *o2).trace();
    if v.im.abs() >= DENSITY_TOL {
        return Err(Error::Numerical(format!("correlator has imaginary part {}", v.im)));
    }
    Ok(v.re)
}

/// Upper/lower radial weights `((1 + mu)/2, (1 - mu)/2)`.
pub fn radial_weights(qn: &QuantumNumbers, alpha: f64) -> Result<(f64, f64)> {
    let mu = sommerfeld_mu(qn.n, qn.kappa, alpha)?;
    Ok(((1.0 + mu) / 2.0, (1.0 - mu) / 2.0))
}

/// `(1/N) int r^2 f^2 dr` and `(1/N) int r^2 g^2 dr` by radial quadrature.
pub fn radial_weights_quadrature(
    qn: &QuantumNumbers,
    alpha: f64,
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    spec.validate()?;
    let (ff, gg) = RadialSolution::new(qn.n, qn.kappa, alpha)?.moments(spec);
    Ok((ff / (ff + gg), gg / (ff + gg)))
}

/// Haar-random normalised four-spinors from a seeded generator.
pub fn random_pure_spinors(seed: u64, count: usize) -> Vec<Spinor4> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut psi = [Complex64::new(0.0, 0.0); 4];
            for z in psi.iter_mut() {
                *z = Complex64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng));
            }
            let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            psi.map(|z| z / norm)
        })
        .collect()
}

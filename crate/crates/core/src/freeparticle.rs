//! Free Dirac electron moving along `z`, and the energy-sign content of the
//! observables used to test it.
//!
//! The plane-wave factor `e^{ikz}` is dropped: all observables are constant
//! matrices, so expectation values only see the four-spinor
//!
//! ```text
//! psi = ( chi, h k/(1+E) chi ) / sqrt(N_e),   N_e = 2E/(1+E),   E = sqrt(1+k^2)
//! ```
//!
//! where `h = +-1` is the helicity and `chi` the matching `sigma_z` eigenvector.
//!
//! with `k = beta_v / sqrt(1 - beta_v^2)` and `E = 1 / sqrt(1 - beta_v^2)`.
//!
//! The relativistic Dirac oscillator is not modelled. Its spectrum also has
//! both energy signs, so the same measurability criterion applies to it.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::{alpha, beta, gamma_matrix, inner, ComplexMatrix4, Spinor4};
use crate::contextuality::{chsh_value, ChshObservables, InequalityReport, Parameters};
use crate::error::{Error, Result};
use crate::hydrogen::{sommerfeld_mu, QuantumNumbers};
use crate::spindensity::ReducedSpinDensity;

/// Negative-energy weight above which an eigenvector is flagged.
pub const MIXING_THRESHOLD: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreeElectronState {
    pub beta_v: f64,
    pub k: f64,
    pub energy: f64,
    pub helicity: i32,
    pub normalization: f64,
    pub spinor: Spinor4,
}

fn check_beta(beta_v: f64) -> Result<()> {
    if !(0.0..1.0).contains(&beta_v) {
        return Err(Error::arg(format!("velocity v/c must lie in [0, 1) (got {beta_v})")));
    }
    Ok(())
}

pub fn free_state(beta_v: f64, helicity: i32) -> Result<FreeElectronState> {
    check_beta(beta_v)?;
    let chi = match helicity {
        1 => [1.0, 0.0],
        -1 => [0.0, 1.0],
        _ => return Err(Error::arg(format!("helicity must be +1 or -1 (got {helicity})"))),
    };
    let gamma = 1.0 / (1.0 - beta_v * beta_v).sqrt();
    let k = beta_v * gamma;
    let energy = gamma;
    let normalization = 2.0 * energy / (1.0 + energy);
    // (sigma . p) chi / (1 + E) with p along z
    let lower = helicity as f64 * k / (1.0 + energy);
    let s = normalization.sqrt();
    let c = |x: f64| Complex64::new(x / s, 0.0);
    Ok(FreeElectronState {
        beta_v,
        k,
        energy,
        helicity,
        normalization,
        spinor: [c(chi[0]), c(chi[1]), c(lower * chi[0]), c(lower * chi[1])],
    })
}

/// Free Dirac Hamiltonian at momentum `k` along `z`, Dirac representation.
pub fn free_hamiltonian(k: f64) -> ComplexMatrix4 {
    alpha(2).scale_real(k) + beta()
}

/// `theta = arctan(Mc^2 / E) = arctan(sqrt(1 - beta_v^2))`.
pub fn observable_angle(beta_v: f64) -> Result<f64> {
    check_beta(beta_v)?;
    Ok((1.0 - beta_v * beta_v).sqrt().atan())
}

/// `A' = g0, B' = (cos t g3 + sin t g1) g5, C' = i g2,
/// D' = (-cos t g3 + sin t g1) g5`.
pub fn free_observables(beta_v: f64) -> Result<ChshObservables> {
    let theta = observable_angle(beta_v)?;
    let g = |k| gamma_matrix(k).expect("valid index");
    let (s, c) = theta.sin_cos();
    let g5 = g(5);
    Ok([
        g(0),
        (g(3).scale_real(c) + g(1).scale_real(s)) * g5,
        g(2).scale(Complex64::new(0.0, 1.0)),
        (g(3).scale_real(-c) + g(1).scale_real(s)) * g5,
    ])
}

/// CHSH-like value of the positive-helicity state with the matched observables.
pub fn free_chsh(beta_v: f64) -> Result<InequalityReport> {
    let state = free_state(beta_v, 1)?;
    let rho = ReducedSpinDensity::from_pure(&state.spinor, format!("free electron v/c={beta_v}"))?;
    let report = chsh_value(&rho, &free_observables(beta_v)?)?;
    Ok(report.with_parameters(Parameters {
        beta: Some(beta_v),
        theta: Some(observable_angle(beta_v)?),
        closed_form: Some(2.0 * (2.0 - beta_v * beta_v).sqrt()),
        ..Default::default()
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenWeight {
    pub eigenvalue: f64,
    pub vector: Spinor4,
    /// `<v| P_- |v>`.
    pub negative_weight: f64,
}

/// Energy-sign decomposition of an observable at fixed momentum.
///
/// Within each degenerate eigenspace the eigenvectors are chosen to
/// diagonalise the negative-energy projector, so the weights do not depend on
/// an arbitrary basis choice.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergySplit {
    pub beta_v: f64,
    pub energy: f64,
    pub positive: ComplexMatrix4,
    pub negative: ComplexMatrix4,
    pub eigenvectors: Vec<EigenWeight>,
}

impl EnergySplit {
    /// `true` if some eigenvector mixes both energy signs.
    pub fn mixes_energy_signs(&self) -> bool {
        self.eigenvectors
            .iter()
            .any(|e| e.negative_weight > MIXING_THRESHOLD && e.negative_weight < 1.0 - MIXING_THRESHOLD)
    }

    pub fn negative_weight_of(&self, psi: &Spinor4) -> f64 {
        inner(psi, &self.negative.apply(psi)).re
    }
}

pub fn energy_split(beta_v: f64, observable: &ComplexMatrix4) -> Result<EnergySplit> {
    check_beta(beta_v)?;
    if !observable.is_hermitian(1e-10) {
        return Err(Error::arg("observable must be hermitian"));
    }
    let state = free_state(beta_v, 1)?;
    let h = free_hamiltonian(state.k);
    let (evals, evecs) = h.eigh();
    let mut negative = ComplexMatrix4::zero();
    let mut positive = ComplexMatrix4::zero();
    for (e, v) in evals.iter().zip(&evecs) {
        let p = ComplexMatrix4::outer(v, v);
        if *e < 0.0 {
            negative = negative + p;
        } else {
            positive = positive + p;
        }
    }

    let (ovals, ovecs) = observable.eigh();
    let mut eigenvectors = Vec::with_capacity(4);
    let mut start = 0;
    while start < 4 {
        let mut end = start + 1;
        while end < 4 && (ovals[end] - ovals[start]).abs() < 1e-8 {
            end += 1;
        }
        let basis = &ovecs[start..end];
        let d = basis.len();
        let compressed = DMatrix::from_fn(d, d, |i, j| inner(&basis[i], &negative.apply(&basis[j])));
        let eig = compressed.symmetric_eigen();
        for c in 0..d {
            let mut v = [Complex64::new(0.0, 0.0); 4];
            for (i, b) in basis.iter().enumerate() {
                for k in 0..4 {
                    v[k] += b[k] * eig.eigenvectors[(i, c)];
                }
            }
            eigenvectors.push(EigenWeight {
                eigenvalue: ovals[start],
                negative_weight: inner(&v, &negative.apply(&v)).re,
                vector: v,
            });
        }
        start = end;
    }
    Ok(EnergySplit {
        beta_v,
        energy: state.energy,
        positive,
        negative,
        eigenvectors,
    })
}

/// Sommerfeld energies `E / Mc^2` of every `(n, kappa)` with `n <= n_max`.
pub fn hydrogen_spectrum(n_max: u32, alpha: f64) -> Result<Vec<(u32, i32, f64)>> {
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for qn in QuantumNumbers::enumerate(n_max) {
        if seen.insert((qn.n, qn.kappa)) {
            out.push((qn.n, qn.kappa, sommerfeld_mu(qn.n, qn.kappa, alpha)?));
        }
    }
    Ok(out)
}

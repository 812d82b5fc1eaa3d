//! Special functions and quadrature rules.
//!
//! * terminating confluent hypergeometric series `1F1(p; q; z)` with `p <= 0`
//! * orthonormal spherical harmonics with the Condon-Shortley phase
//! * Gauss-Legendre rules and the tensor-product rule in `(rho, cos theta, phi)`

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `1F1(p; q; z)` for a non-positive integer `p`, summed exactly as the
/// `|p| + 1` term polynomial.
pub fn hyp1f1_terminating(p: i64, q: f64, z: f64) -> Result<f64> {
    if p > 0 {
        return Err(Error::arg(format!(
            "terminating 1F1 needs a non-positive integer first argument (got {p})"
        )));
    }
    if q <= 0.0 && q.fract() == 0.0 {
        return Err(Error::arg(format!(
            "1F1 second argument must not be a non-positive integer (got {q})"
        )));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..(-p) {
        let k = k as f64;
        term *= (p as f64 + k) / (q + k) * z / (k + 1.0);
        sum += term;
    }
    Ok(sum)
}

/// Normalised associated Legendre function `N_lm P_l^m(x)` for `0 <= m <= l`,
/// including the Condon-Shortley phase, so that
/// `Y_lm(theta, phi) = legendre_normalized(l, m, cos theta) e^{i m phi}`.
///
/// Upward recurrence in `l` at fixed `m`.
pub fn legendre_normalized(l: u32, m: u32, x: f64) -> f64 {
    debug_assert!(m <= l);
    let sin_t = (1.0 - x * x).max(0.0).sqrt();
    let mut pmm = (1.0 / (4.0 * PI)).sqrt();
    for k in 1..=m {
        let k = k as f64;
        pmm *= -((2.0 * k + 1.0) / (2.0 * k)).sqrt() * sin_t;
    }
    if l == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = x * (2.0 * m as f64 + 3.0).sqrt() * pmm;
    let mf = m as f64;
    for ll in (m + 2)..=l {
        let lf = ll as f64;
        let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
        let lp = lf - 1.0;
        let a_prev = ((4.0 * lp * lp - 1.0) / (lp * lp - mf * mf)).sqrt();
        let next = a * (x * cur - prev / a_prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Orthonormal spherical harmonic `Y_lm(theta, phi)`.
pub fn spherical_harmonic(l: i64, m: i64, theta: f64, phi: f64) -> Result<Complex64> {
    if l < 0 || m.abs() > l {
        return Err(Error::arg(format!(
            "spherical harmonic needs |m| <= l, l >= 0 (got l = {l}, m = {m})"
        )));
    }
    let am = m.unsigned_abs() as u32;
    let p = legendre_normalized(l as u32, am, theta.cos());
    let y = Complex64::from_polar(p, am as f64 * phi);
    if m < 0 {
        let sign = if am.is_multiple_of(2) { 1.0 } else { -1.0 };
        Ok(y.conj() * sign)
    } else {
        Ok(y)
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, nodes ascending.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 1, "Gauss-Legendre order must be at least 1");
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess for the i-th largest root
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        dp = if d != 0.0 { d } else { dp };
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Discretisation of `int r^2 dr int sin(theta) dtheta int dphi`.
///
/// The radial coordinate is the dimensionless `rho`; a `None` cutoff selects
/// `rho_max = 60 + 10 n` for principal quantum number `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadratureSpec {
    pub radial_panels: usize,
    pub radial_order: usize,
    pub radial_cutoff: Option<f64>,
    pub theta_order: usize,
    pub phi_order: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            radial_panels: 4,
            radial_order: 32,
            radial_cutoff: None,
            theta_order: 24,
            phi_order: 24,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.radial_panels == 0
            || self.radial_order == 0
            || self.theta_order == 0
            || self.phi_order == 0
        {
            return Err(Error::arg("quadrature orders and panel count must be >= 1"));
        }
        if let Some(c) = self.radial_cutoff {
            if !(c > 0.0 && c.is_finite()) {
                return Err(Error::arg(format!("radial cutoff must be positive (got {c})")));
            }
        }
        Ok(())
    }

    /// Checks that the azimuthal rule integrates products of harmonics with
    /// orbital index up to `l_max` exactly.
    pub fn validate_for(&self, l_max: u32) -> Result<()> {
        self.validate()?;
        let need = 2 * l_max as usize + 2;
        if self.phi_order < need {
            return Err(Error::arg(format!(
                "phi_order {} too small for l_max = {l_max} (need >= {need})",
                self.phi_order
            )));
        }
        Ok(())
    }

    pub fn cutoff_for(&self, principal: u32) -> f64 {
        self.radial_cutoff
            .unwrap_or(60.0 + 10.0 * principal as f64)
    }
}

/// One-dimensional rule as `(node, weight)` pairs.
pub type Rule = Vec<(f64, f64)>;

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureNodes {
    /// Nodes in `rho` on `[0, rho_max]`; weights are plain `d rho` weights.
    pub radial: Rule,
    /// Nodes in `cos(theta)` on `[-1, 1]`.
    pub cos_theta: Rule,
    /// Equispaced `phi` on `[0, 2 pi)`.
    pub phi: Rule,
}

/// Gauss-Legendre on each of `panels` geometrically growing panels of
/// `[0, cutoff]`; breakpoints at `cutoff * 2^(k - panels)`.
pub fn paneled_rule(panels: usize, order: usize, cutoff: f64) -> Rule {
    let (x, w) = gauss_legendre(order);
    let mut breaks = vec![0.0];
    breaks.extend((1..=panels).map(|k| cutoff * 2f64.powi(k as i32 - panels as i32)));
    let mut rule = Vec::with_capacity(panels * order);
    for win in breaks.windows(2) {
        let (lo, hi) = (win[0], win[1]);
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        rule.extend(x.iter().zip(&w).map(|(xi, wi)| (mid + half * xi, half * wi)));
    }
    rule
}

pub fn quadrature_nodes(spec: &QuadratureSpec, cutoff: f64) -> QuadratureNodes {
    let (x, w) = gauss_legendre(spec.theta_order);
    let dphi = TAU / spec.phi_order as f64;
    QuadratureNodes {
        radial: paneled_rule(spec.radial_panels, spec.radial_order, cutoff),
        cos_theta: x.into_iter().zip(w).collect(),
        phi: (0..spec.phi_order).map(|k| (k as f64 * dphi, dphi)).collect(),
    }
}

//! Bound states of the Dirac-Coulomb problem.
//!
//! A state is labelled by `(n, kappa, m_j)`. Throughout, `l = |kappa| - 1` is
//! the orbital index of the `A` spinor harmonic and `m = m_j - 1/2`; the `B`
//! harmonic carries orbital index `l + 1`. States with `kappa > 0` put `A` in
//! the upper two components, states with `kappa < 0` put `B` there:
//!
//! ```text
//! psi+ = ( i f phi_A, g phi_B ) / sqrt(N)      kappa > 0
//! psi- = ( i f phi_B, g phi_A ) / sqrt(N)      kappa < 0
//! ```
//!
//! The four-spinor is in the Dirac representation, `beta = diag(1, 1, -1, -1)`.
//! `K = beta (Sigma . L + 1)` acts on these states with eigenvalue `kappa`.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::Spinor4;
use crate::error::{Error, Result};
use crate::specfun::{hyp1f1_terminating, paneled_rule, spherical_harmonic, QuadratureSpec};

/// Quantum numbers of a bound state. `m_j` is stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub kappa: i32,
    pub two_mj: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, kappa: i32, two_mj: i32) -> Result<Self> {
        if n == 0 {
            return Err(Error::arg("principal quantum number must be >= 1"));
        }
        if kappa == 0 {
            return Err(Error::arg("kappa must be nonzero"));
        }
        let ak = kappa.unsigned_abs();
        if ak > n {
            return Err(Error::arg(format!("|kappa| = {ak} exceeds n = {n}")));
        }
        if ak == n && kappa < 0 {
            return Err(Error::arg(format!(
                "for n = |kappa| = {n} only kappa > 0 exists"
            )));
        }
        if two_mj % 2 == 0 || two_mj.abs() > 2 * kappa.abs() - 1 {
            return Err(Error::arg(format!(
                "m_j = {two_mj}/2 is not in -j..j for j = {}/2",
                2 * kappa.abs() - 1
            )));
        }
        Ok(QuantumNumbers { n, kappa, two_mj })
    }

    /// From a half-integer `m_j` given as a float.
    pub fn from_mj(n: u32, kappa: i32, mj: f64) -> Result<Self> {
        let two = 2.0 * mj;
        if (two - two.round()).abs() > 1e-9 {
            return Err(Error::arg(format!("m_j = {mj} is not a half-integer")));
        }
        Self::new(n, kappa, two.round() as i32)
    }

    /// `+1` for `psi+` (`kappa > 0`), `-1` for `psi-`.
    pub fn sign(&self) -> i32 {
        self.kappa.signum()
    }

    pub fn abs_kappa(&self) -> u32 {
        self.kappa.unsigned_abs()
    }

    pub fn j(&self) -> f64 {
        self.abs_kappa() as f64 - 0.5
    }

    pub fn mj(&self) -> f64 {
        self.two_mj as f64 / 2.0
    }

    pub fn l(&self) -> i64 {
        self.abs_kappa() as i64 - 1
    }

    pub fn m(&self) -> i64 {
        ((self.two_mj - 1) / 2) as i64
    }

    /// Number of radial nodes, `n - |kappa|`.
    pub fn n_radial(&self) -> u32 {
        self.n - self.abs_kappa()
    }

    /// Largest orbital index among the two spinor harmonics.
    pub fn l_max(&self) -> u32 {
        self.abs_kappa()
    }

    /// Spinor harmonics in the (upper, lower) components.
    pub fn parts(&self) -> (HarmonicPart, HarmonicPart) {
        if self.kappa > 0 {
            (HarmonicPart::A, HarmonicPart::B)
        } else {
            (HarmonicPart::B, HarmonicPart::A)
        }
    }

    /// Every bound state with `n <= n_max`, ordered by `n`, then `|kappa|`,
    /// then sign (`+` first), then `m_j` ascending.
    pub fn enumerate(n_max: u32) -> Vec<QuantumNumbers> {
        let mut out = Vec::new();
        for n in 1..=n_max {
            for ak in 1..=n as i32 {
                for kappa in [ak, -ak] {
                    if kappa < 0 && ak == n as i32 {
                        continue;
                    }
                    for two_mj in (-(2 * ak - 1)..=(2 * ak - 1)).step_by(2) {
                        out.push(QuantumNumbers { n, kappa, two_mj });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} kappa={} mj={}/2 {}",
            self.n,
            self.kappa,
            self.two_mj,
            if self.kappa > 0 { "+" } else { "-" }
        )
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::arg(format!(
            "fine-structure constant must lie in [0, 1) (got {alpha})"
        )));
    }
    Ok(())
}

/// Sommerfeld energy `E / Mc^2`. Depends on `kappa` only through `|kappa|`.
pub fn sommerfeld_mu(n: u32, kappa: i32, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if n == 0 || kappa == 0 {
        return Err(Error::arg("need n >= 1 and kappa != 0"));
    }
    let ak = kappa.unsigned_abs();
    if ak > n {
        return Err(Error::arg(format!("|kappa| = {ak} exceeds n = {n}")));
    }
    let k = ak as f64;
    let nu = (k * k - alpha * alpha).sqrt();
    let denom = (n - ak) as f64 + nu;
    Ok((1.0 + alpha * alpha / (denom * denom)).powf(-0.5))
}

/// Radial solution data for one `(n, kappa)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialSolution {
    pub n: u32,
    pub kappa: i32,
    pub alpha: f64,
    /// `n - |kappa|`.
    pub n_radial: u32,
    /// `sqrt(kappa^2 - alpha^2)`.
    pub nu: f64,
    /// `E / Mc^2`.
    pub mu: f64,
    /// `rho = rho_per_r * r`, with `rho_per_r = 2 sqrt(1 - mu^2)`.
    pub rho_per_r: f64,
}

impl RadialSolution {
    pub fn new(n: u32, kappa: i32, alpha: f64) -> Result<Self> {
        if alpha <= 0.0 {
            return Err(Error::arg(format!(
                "bound-state wavefunctions need alpha > 0 (got {alpha})"
            )));
        }
        let mu = sommerfeld_mu(n, kappa, alpha)?;
        let ak = kappa.unsigned_abs();
        Ok(RadialSolution {
            n,
            kappa,
            alpha,
            n_radial: n - ak,
            nu: ((ak * ak) as f64 - alpha * alpha).sqrt(),
            mu,
            rho_per_r: 2.0 * (1.0 - mu * mu).sqrt(),
        })
    }

    /// `alpha * lambda + kappa` with `lambda = 1/sqrt(1 - mu^2)`.
    fn coupling(&self) -> f64 {
        self.alpha / (1.0 - self.mu * self.mu).sqrt() + self.kappa as f64
    }

    /// Unnormalised `(f, g)` at dimensionless radius `rho`.
    pub fn fg(&self, rho: f64) -> (f64, f64) {
        let q = 2.0 * self.nu + 1.0;
        let nt = self.n_radial as i64;
        let lead = hyp1f1_terminating(-nt, q, rho).expect("non-positive first argument");
        // the 1F1(1 - n', ...) term carries a factor n' and is absent for n' = 0
        let next = if nt > 0 {
            nt as f64 * hyp1f1_terminating(1 - nt, q, rho).expect("non-positive first argument")
        } else {
            0.0
        };
        let c = self.coupling() * lead;
        let envelope = ((self.nu - 1.0) * rho.ln() - 0.5 * rho).exp();
        let f = (1.0 + self.mu).sqrt() * (c - next) * envelope;
        let g = (1.0 - self.mu).sqrt() * (c + next) * envelope;
        (f, g)
    }

    /// `(int r^2 f^2 dr, int r^2 g^2 dr)` by paneled Gauss-Legendre in `rho`.
    pub fn moments(&self, spec: &QuadratureSpec) -> (f64, f64) {
        let rule = paneled_rule(spec.radial_panels, spec.radial_order, spec.cutoff_for(self.n));
        let jac = self.rho_per_r.powi(-3);
        let (mut ff, mut gg) = (0.0, 0.0);
        for (rho, w) in rule {
            let (f, g) = self.fg(rho);
            ff += w * rho * rho * f * f;
            gg += w * rho * rho * g * g;
        }
        (ff * jac, gg * jac)
    }
}

/// Unnormalised radial functions of `qn` at dimensionless radius `rho`.
pub fn radial_fg(qn: &QuantumNumbers, alpha: f64, rho: f64) -> Result<(f64, f64)> {
    Ok(RadialSolution::new(qn.n, qn.kappa, alpha)?.fg(rho))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HarmonicPart {
    A,
    B,
}

/// One component of a spinor harmonic: `coefficient * Y_{l, m}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicTerm {
    pub coefficient: f64,
    pub l: i64,
    pub m: i64,
}

/// Spinor harmonic with orbital index `l` (of part `A`) and `m = m_j - 1/2`,
/// as one term per component. Terms with zero coefficient are dropped.
pub fn spinor_harmonic_terms(part: HarmonicPart, l: i64, m: i64) -> [Option<HarmonicTerm>; 2] {
    let lf = l as f64;
    let mf = m as f64;
    let raw = match part {
        HarmonicPart::A => {
            let s = (2.0 * lf + 1.0).sqrt();
            [
                ((lf + mf + 1.0).max(0.0).sqrt() / s, l, m),
                ((lf - mf).max(0.0).sqrt() / s, l, m + 1),
            ]
        }
        HarmonicPart::B => {
            let s = (2.0 * lf + 3.0).sqrt();
            [
                (-(lf - mf + 1.0).max(0.0).sqrt() / s, l + 1, m),
                ((lf + mf + 2.0).max(0.0).sqrt() / s, l + 1, m + 1),
            ]
        }
    };
    raw.map(|(coefficient, l, m)| {
        (coefficient != 0.0).then_some(HarmonicTerm { coefficient, l, m })
    })
}

/// Two-component spinor harmonic at `(theta, phi)` for `j`, `m_j` given
/// doubled.
pub fn spinor_harmonic(
    part: HarmonicPart,
    two_j: i32,
    two_mj: i32,
    theta: f64,
    phi: f64,
) -> Result<[Complex64; 2]> {
    if two_j < 1 || two_j % 2 == 0 || two_mj % 2 == 0 || two_mj.abs() > two_j {
        return Err(Error::arg(format!("invalid j = {two_j}/2, m_j = {two_mj}/2")));
    }
    let l = ((two_j - 1) / 2) as i64;
    let m = ((two_mj - 1) / 2) as i64;
    eval_terms(spinor_harmonic_terms(part, l, m), theta, phi)
}

fn eval_terms(terms: [Option<HarmonicTerm>; 2], theta: f64, phi: f64) -> Result<[Complex64; 2]> {
    let mut out = [Complex64::new(0.0, 0.0); 2];
    for (slot, term) in out.iter_mut().zip(terms) {
        if let Some(t) = term {
            *slot = spherical_harmonic(t.l, t.m, theta, phi)? * t.coefficient;
        }
    }
    Ok(out)
}

/// Normalised bound-state four-spinor as a function of `(r, theta, phi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    pub qn: QuantumNumbers,
    pub radial: RadialSolution,
    /// `N = int r^2 (f^2 + g^2) dr`, natural units.
    pub normalization: f64,
    upper: [Option<HarmonicTerm>; 2],
    lower: [Option<HarmonicTerm>; 2],
}

impl SpinorField {
    /// Amplitudes at radius `r` (natural units, `Mc/hbar = 1`).
    pub fn eval(&self, r: f64, theta: f64, phi: f64) -> Spinor4 {
        self.eval_rho(self.radial.rho_per_r * r, theta, phi)
    }

    /// Amplitudes at dimensionless radius `rho`.
    pub fn eval_rho(&self, rho: f64, theta: f64, phi: f64) -> Spinor4 {
        Self::combine(self.radial_part(rho), self.angular_part(theta, phi))
    }

    /// Normalised `(f, g)` at `rho`.
    pub fn radial_part(&self, rho: f64) -> (f64, f64) {
        let (f, g) = self.radial.fg(rho);
        let s = self.normalization.sqrt();
        (f / s, g / s)
    }

    /// Spinor harmonics of the (upper, lower) blocks.
    pub fn angular_part(&self, theta: f64, phi: f64) -> ([Complex64; 2], [Complex64; 2]) {
        (
            eval_terms(self.upper, theta, phi).expect("terms validated"),
            eval_terms(self.lower, theta, phi).expect("terms validated"),
        )
    }

    /// Four-spinor from separately evaluated radial and angular factors.
    pub fn combine((f, g): (f64, f64), (up, lo): ([Complex64; 2], [Complex64; 2])) -> Spinor4 {
        let i_f = Complex64::new(0.0, f);
        [i_f * up[0], i_f * up[1], lo[0] * g, lo[1] * g]
    }

    pub fn mu(&self) -> f64 {
        self.radial.mu
    }

    pub fn alpha(&self) -> f64 {
        self.radial.alpha
    }
}

/// Bound state with normalization from the default radial rule.
pub fn eigenstate(qn: &QuantumNumbers, alpha: f64) -> Result<SpinorField> {
    eigenstate_with(qn, alpha, &QuadratureSpec::default())
}

pub fn eigenstate_with(qn: &QuantumNumbers, alpha: f64, spec: &QuadratureSpec) -> Result<SpinorField> {
    spec.validate()?;
    let qn = QuantumNumbers::new(qn.n, qn.kappa, qn.two_mj)?;
    let radial = RadialSolution::new(qn.n, qn.kappa, alpha)?;
    let (ff, gg) = radial.moments(spec);
    let normalization = ff + gg;
    if !(normalization > 0.0 && normalization.is_finite()) {
        return Err(Error::Numerical(format!(
            "radial normalization of {qn} is {normalization}"
        )));
    }
    let (up, lo) = qn.parts();
    Ok(SpinorField {
        qn,
        radial,
        normalization,
        upper: spinor_harmonic_terms(up, qn.l(), qn.m()),
        lower: spinor_harmonic_terms(lo, qn.l(), qn.m()),
    })
}

/// Result of applying `K = beta (Sigma . L + 1)` to a state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KEigenCheck {
    pub expected: f64,
    pub computed: f64,
    /// `|K psi - expected psi| / |psi|` in the harmonic basis.
    pub residual: f64,
    pub k_squared_expected: f64,
    pub k_squared_computed: f64,
    pub k_squared_residual: f64,
}

/// Angular part of a four-spinor: coefficients on `(block, component, l, m)`
/// with `Y_lm` orthonormal.
type Expansion = BTreeMap<(u8, u8, i64, i64), f64>;

fn ladder(l: i64, m: i64, up: bool) -> f64 {
    let (l, m) = (l as f64, m as f64);
    let v = if up { l * (l + 1.0) - m * (m + 1.0) } else { l * (l + 1.0) - m * (m - 1.0) };
    v.max(0.0).sqrt()
}

fn add_to(map: &mut Expansion, key: (u8, u8, i64, i64), v: f64) {
    if v != 0.0 {
        *map.entry(key).or_insert(0.0) += v;
    }
}

/// `K` on an angular expansion. `sigma . L` on `(u, d)`:
/// `u' = L_z u + L_- d`, `d' = L_+ u - L_z d`.
fn apply_k(psi: &Expansion) -> Expansion {
    let mut out = Expansion::new();
    for (&(block, comp, l, m), &c) in psi {
        let beta = if block == 0 { 1.0 } else { -1.0 };
        add_to(&mut out, (block, comp, l, m), beta * c);
        if comp == 0 {
            add_to(&mut out, (block, 0, l, m), beta * m as f64 * c);
            add_to(&mut out, (block, 1, l, m + 1), beta * ladder(l, m, true) * c);
        } else {
            add_to(&mut out, (block, 1, l, m), -beta * m as f64 * c);
            add_to(&mut out, (block, 0, l, m - 1), beta * ladder(l, m, false) * c);
        }
    }
    out
}

fn rayleigh(psi: &Expansion, k_psi: &Expansion) -> (f64, f64) {
    let norm2: f64 = psi.values().map(|c| c * c).sum();
    let overlap: f64 = psi.iter().map(|(k, c)| c * k_psi.get(k).copied().unwrap_or(0.0)).sum();
    let lambda = overlap / norm2;
    let keys: std::collections::BTreeSet<_> = psi.keys().chain(k_psi.keys()).collect();
    let resid2: f64 = keys
        .into_iter()
        .map(|k| {
            let d = k_psi.get(k).copied().unwrap_or(0.0) - lambda * psi.get(k).copied().unwrap_or(0.0);
            d * d
        })
        .sum();
    (lambda, (resid2 / norm2).sqrt())
}

/// Applies `K` analytically via angular-momentum ladder operators and
/// compares with `sign * |kappa|`; also checks `K^2 = J^2 + 1/4`.
pub fn apply_k_eigencheck(qn: &QuantumNumbers) -> Result<KEigenCheck> {
    let qn = QuantumNumbers::new(qn.n, qn.kappa, qn.two_mj)?;
    let (up, lo) = qn.parts();
    let mut psi = Expansion::new();
    for (block, part) in [(0u8, up), (1u8, lo)] {
        for (comp, term) in spinor_harmonic_terms(part, qn.l(), qn.m()).into_iter().enumerate() {
            if let Some(t) = term {
                add_to(&mut psi, (block, comp as u8, t.l, t.m), t.coefficient);
            }
        }
    }
    // the radial factors differ between blocks but K does not mix blocks
    let k_psi = apply_k(&psi);
    let kk_psi = apply_k(&k_psi);
    let (computed, residual) = rayleigh(&psi, &k_psi);
    let (k_squared_computed, k_squared_residual) = rayleigh(&psi, &kk_psi);
    let j = qn.j();
    Ok(KEigenCheck {
        expected: (qn.sign() * qn.abs_kappa() as i32) as f64,
        computed,
        residual,
        k_squared_expected: j * (j + 1.0) + 0.25,
        k_squared_computed,
        k_squared_residual,
    })
}

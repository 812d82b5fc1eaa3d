//! Noncontextuality inequalities and the observables that violate them.
//!
//! CHSH-like inequality on four dichotomic observables with compatible
//! neighbours:
//!
//! ```text
//! <AB> + <BC> + <CD> - <DA> <= 2
//! ```
//!
//! Peres-Mermin inequality on the 3x3 square of `Sigma`/`SigmaPrime` products:
//! the three row products plus the first two column products minus the third
//! column product is at most 4 for noncontextual models; quantum mechanics
//! gives 6 for every state.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::clifford::{build_family, exact_peres_mermin_grid, ComplexMatrix4, Family};
use crate::error::{Error, Result};
use crate::hydrogen::{eigenstate_with, sommerfeld_mu, QuantumNumbers};
use crate::specfun::QuadratureSpec;
use crate::spindensity::{check_compatible, correlator, reduce, ReducedSpinDensity, COMMUTATOR_TOL};

pub const CHSH_BOUND: f64 = 2.0;
pub const PERES_MERMIN_BOUND: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityKind {
    ChshNc,
    PeresMermin,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub label: String,
    /// `+1` or `-1`, the sign the term enters the sum with.
    pub sign: f64,
    pub value: f64,
}

/// Inputs that produced a report. Unused entries are omitted on output.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mj: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<f64>,
    /// Optimal `xi` found by this implementation (not a quoted value).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi_star: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
}

impl Parameters {
    pub fn for_state(qn: &QuantumNumbers, alpha: f64) -> Self {
        Parameters {
            alpha: Some(alpha),
            n: Some(qn.n),
            kappa: Some(qn.kappa),
            mj: Some(qn.mj()),
            sign: Some(qn.sign()),
            mu: sommerfeld_mu(qn.n, qn.kappa, alpha).ok(),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub kind: InequalityKind,
    pub label: String,
    pub terms: Vec<Term>,
    pub value: f64,
    pub bound: f64,
    pub violated: bool,
    pub parameters: Parameters,
}

impl InequalityReport {
    fn from_terms(kind: InequalityKind, label: String, terms: Vec<Term>, bound: f64) -> Self {
        let value = terms.iter().map(|t| t.sign * t.value).sum();
        InequalityReport {
            kind,
            label,
            terms,
            value,
            bound,
            violated: value > bound,
            parameters: Parameters::default(),
        }
    }

    pub fn with_parameters(mut self, parameters: Parameters) -> Self {
        self.parameters = parameters;
        self
    }
}

/// Observables `A, B, C, D` of a CHSH-like test.
pub type ChshObservables = [ComplexMatrix4; 4];

/// Index pairs that must be compatible: `(A,B), (B,C), (C,D), (D,A)`.
pub const CHSH_CONTEXTS: [[usize; 2]; 4] = [[0, 1], [1, 2], [2, 3], [3, 0]];

fn require_dichotomic(ops: &[ComplexMatrix4]) -> Result<()> {
    for (k, op) in ops.iter().enumerate() {
        if !op.is_hermitian(COMMUTATOR_TOL) || !op.is_involution(COMMUTATOR_TOL) {
            return Err(Error::ContractViolation(format!(
                "observable {k} is not a hermitian involution"
            )));
        }
    }
    Ok(())
}

/// `<AB> + <BC> + <CD> - <DA>` against the bound 2.
pub fn chsh_value(rho: &ReducedSpinDensity, obs: &ChshObservables) -> Result<InequalityReport> {
    require_dichotomic(obs)?;
    const NAMES: [&str; 4] = ["A", "B", "C", "D"];
    let mut terms = Vec::with_capacity(4);
    for (k, [i, j]) in CHSH_CONTEXTS.into_iter().enumerate() {
        let value = correlator(rho, &obs[i], &obs[j])?;
        terms.push(Term {
            label: format!("{}{}", NAMES[i], NAMES[j]),
            sign: if k == 3 { -1.0 } else { 1.0 },
            value,
        });
    }
    Ok(InequalityReport::from_terms(
        InequalityKind::ChshNc,
        rho.source.clone(),
        terms,
        CHSH_BOUND,
    ))
}

/// Ground-state observables for `m_j = +1/2` (`two_mj = 1`) or `-1/2`.
pub fn ground_observables(two_mj: i32) -> Result<ChshObservables> {
    let g = build_family(Family::Gamma);
    let gp = build_family(Family::GammaPrime);
    let s = FRAC_1_SQRT_2;
    match two_mj {
        1 => Ok([
            g.x,
            (gp.x - gp.z).scale_real(s),
            g.z,
            (gp.x + gp.z).scale_real(-s),
        ]),
        -1 => Ok([
            g.x,
            (gp.z - gp.x).scale_real(s),
            g.z,
            (gp.x + gp.z).scale_real(s),
        ]),
        _ => Err(Error::arg(format!(
            "ground-state observables exist for m_j = +-1/2 only (got {two_mj}/2)"
        ))),
    }
}

/// `A = Gamma_y, B = -sin(xi) Gamma'_y + cos(xi) Gamma'_z, C = Gamma_z,
/// D = sin(xi) Gamma'_y + cos(xi) Gamma'_z`.
pub fn excited_observables(xi: f64) -> ChshObservables {
    let g = build_family(Family::Gamma);
    let gp = build_family(Family::GammaPrime);
    let (s, c) = xi.sin_cos();
    [
        g.y,
        gp.y.scale_real(-s) + gp.z.scale_real(c),
        g.z,
        gp.y.scale_real(s) + gp.z.scale_real(c),
    ]
}

/// Closed-form CHSH value of the `xi` family for a bound state,
/// `2 (c cos xi - mu sin xi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExcitedClosedForm {
    pub mu: f64,
    /// `(2m+1)(mu+2l+2)/(4l^2+8l+3)` for `kappa > 0`,
    /// `(2m+1)(2l+2-mu)/(4l^2+8l+3)` for `kappa < 0`.
    pub x: f64,
    /// Coefficient of `cos(xi)`: `-x` for `kappa > 0`, `+x` for `kappa < 0`.
    pub cos_coefficient: f64,
    pub xi_star: f64,
    pub value_star: f64,
}

impl ExcitedClosedForm {
    pub fn value_at(&self, xi: f64) -> f64 {
        2.0 * (self.cos_coefficient * xi.cos() - self.mu * xi.sin())
    }
}

/// Maximising `xi` and the maximal value `2 sqrt(mu^2 + X^2)`.
pub fn optimal_xi(qn: &QuantumNumbers, alpha: f64) -> Result<ExcitedClosedForm> {
    let qn = QuantumNumbers::new(qn.n, qn.kappa, qn.two_mj)?;
    let mu = sommerfeld_mu(qn.n, qn.kappa, alpha)?;
    let l = qn.l() as f64;
    let two_m_plus_1 = (2 * qn.m() + 1) as f64;
    let denom = 4.0 * l * l + 8.0 * l + 3.0;
    let (x, cos_coefficient) = if qn.kappa > 0 {
        let x = two_m_plus_1 * (mu + 2.0 * l + 2.0) / denom;
        (x, -x)
    } else {
        let x = two_m_plus_1 * (2.0 * l + 2.0 - mu) / denom;
        (x, x)
    };
    // maximum of c cos(xi) + s sin(xi) with s = -mu
    let xi_star = (-mu).atan2(cos_coefficient);
    Ok(ExcitedClosedForm {
        mu,
        x,
        cos_coefficient,
        xi_star,
        value_star: 2.0 * (mu * mu + x * x).sqrt(),
    })
}

/// `2 sqrt(1 + (1 - 4 a^2) / (4 (l+1)^2))`, below which no `kappa > 0` state
/// falls.
pub fn kappa_positive_lower_bound(l: i64, alpha: f64) -> f64 {
    let lp = (l + 1) as f64;
    2.0 * (1.0 + (1.0 - 4.0 * alpha * alpha) / (4.0 * lp * lp)).sqrt()
}

/// Reduced density of a bound state with the given quadrature.
pub fn hydrogen_density(
    qn: &QuantumNumbers,
    alpha: f64,
    spec: &QuadratureSpec,
) -> Result<ReducedSpinDensity> {
    reduce(&eigenstate_with(qn, alpha, spec)?, spec)
}

/// Numeric CHSH value of a bound state with the `xi` family, at `xi` or at
/// the closed-form optimum.
pub fn hydrogen_chsh(
    rho: &ReducedSpinDensity,
    qn: &QuantumNumbers,
    alpha: f64,
    xi: Option<f64>,
) -> Result<InequalityReport> {
    let closed = optimal_xi(qn, alpha)?;
    let xi = xi.unwrap_or(closed.xi_star);
    let mut params = Parameters::for_state(qn, alpha);
    params.xi = Some(xi);
    params.xi_star = Some(closed.xi_star);
    params.closed_form = Some(closed.value_at(xi));
    if qn.kappa > 0 {
        params.lower_bound = Some(kappa_positive_lower_bound(qn.l(), alpha));
    }
    Ok(chsh_value(rho, &excited_observables(xi))?.with_parameters(params))
}

/// Ground-state CHSH value with the dedicated `m_j = +-1/2` observables.
pub fn ground_chsh(rho: &ReducedSpinDensity, qn: &QuantumNumbers, alpha: f64) -> Result<InequalityReport> {
    if qn.n != 1 {
        return Err(Error::arg(format!("{qn} is not a ground state")));
    }
    let mut params = Parameters::for_state(qn, alpha);
    params.closed_form = Some(std::f64::consts::SQRT_2 * (1.0 + (1.0 - alpha * alpha).sqrt()));
    Ok(chsh_value(rho, &ground_observables(qn.two_mj)?)?.with_parameters(params))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeresMerminSquare {
    pub grid: [[ComplexMatrix4; 3]; 3],
}

impl PeresMerminSquare {
    pub fn row(&self, r: usize) -> [ComplexMatrix4; 3] {
        self.grid[r]
    }

    pub fn column(&self, c: usize) -> [ComplexMatrix4; 3] {
        [self.grid[0][c], self.grid[1][c], self.grid[2][c]]
    }

    /// The six contexts in inequality order, with their signs.
    pub fn contexts(&self) -> Vec<(String, [ComplexMatrix4; 3], f64)> {
        let mut out: Vec<_> = (0..3)
            .map(|r| (format!("row{}", r + 1), self.row(r), 1.0))
            .collect();
        out.extend((0..3).map(|c| {
            (
                format!("col{}", c + 1),
                self.column(c),
                if c == 2 { -1.0 } else { 1.0 },
            )
        }));
        out
    }
}

pub fn peres_mermin_square() -> PeresMerminSquare {
    PeresMerminSquare {
        grid: exact_peres_mermin_grid().map(|row| row.map(|m| m.to_complex())),
    }
}

/// Sum of the six context products with the third column subtracted.
pub fn peres_mermin_value(rho: &ReducedSpinDensity) -> Result<InequalityReport> {
    let square = peres_mermin_square();
    let mut terms = Vec::with_capacity(6);
    for (label, ops, sign) in square.contexts() {
        require_dichotomic(&ops)?;
        for i in 0..3 {
            for j in (i + 1)..3 {
                check_compatible(&ops[i], &ops[j])?;
            }
        }
        let value = rho.expectation(&(ops[0] * ops[1] * ops[2]));
        terms.push(Term { label, sign, value });
    }
    Ok(InequalityReport::from_terms(
        InequalityKind::PeresMermin,
        rho.source.clone(),
        terms,
        PERES_MERMIN_BOUND,
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContextCheck {
    pub indices: Vec<usize>,
    pub compatible: bool,
    /// Largest Frobenius norm of a pairwise commutator in the context.
    pub max_commutator: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContextReport {
    pub contexts: Vec<ContextCheck>,
}

impl ContextReport {
    pub fn all_compatible(&self) -> bool {
        self.contexts.iter().all(|c| c.compatible)
    }

    pub fn violations(&self) -> impl Iterator<Item = &ContextCheck> {
        self.contexts.iter().filter(|c| !c.compatible)
    }
}

/// Pairwise commutation within each declared context. Out-of-range indices
/// are reported as incompatible.
pub fn check_context(observables: &[ComplexMatrix4], contexts: &[Vec<usize>]) -> ContextReport {
    let contexts = contexts
        .iter()
        .map(|ctx| {
            let mut worst = 0.0f64;
            let mut valid = true;
            for (a, &i) in ctx.iter().enumerate() {
                for &j in &ctx[a + 1..] {
                    match (observables.get(i), observables.get(j)) {
                        (Some(oi), Some(oj)) => {
                            worst = worst.max(oi.commutator(oj).frobenius_norm());
                        }
                        _ => valid = false,
                    }
                }
            }
            ContextCheck {
                indices: ctx.clone(),
                compatible: valid && worst <= COMMUTATOR_TOL,
                max_commutator: if valid { worst } else { f64::INFINITY },
            }
        })
        .collect();
    ContextReport { contexts }
}

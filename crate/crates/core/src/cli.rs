//! Scenario runner behind the `relctx` binary.
//!
//! [`execute`] turns a [`RunConfig`] into a [`ReportDocument`]; [`render`]
//! writes it as JSON or CSV. Output is a pure function of the config: no
//! clocks, no unseeded randomness. Numbers are written with 15 significant
//! digits.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::clifford::{audit_algebra, weyl_from_dirac, AlgebraAudit};
use crate::contextuality::{
    ground_chsh, hydrogen_chsh, hydrogen_density, peres_mermin_value, InequalityReport,
};
use crate::error::{Error, Result};
use crate::freeparticle::{energy_split, free_chsh, free_observables, hydrogen_spectrum, MIXING_THRESHOLD};
use crate::hydrogen::QuantumNumbers;
use crate::specfun::QuadratureSpec;
use crate::spindensity::{random_pure_spinors, radial_weights, ReducedSpinDensity};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Header of CSV output for commands that report bound states.
pub const STATE_CSV_HEADER: [&str; 9] =
    ["n", "kappa", "mj", "sign", "mu", "xi_star", "value", "bound", "violated"];
/// Header of CSV output for every other command.
pub const GENERIC_CSV_HEADER: [&str; 5] = ["kind", "label", "value", "bound", "violated"];

/// Largest grid accepted by `--beta-grid`; the grid spans `[0, 0.999]`.
pub const BETA_GRID_MAX: f64 = 0.999;
/// Number of random pure states checked by `peres-mermin`.
pub const RANDOM_STATES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Audit,
    Ground,
    Excited,
    Sweep,
    PeresMermin,
    FreeElectron,
    Measurability,
    Converge,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Audit => "audit",
            Command::Ground => "ground",
            Command::Excited => "excited",
            Command::Sweep => "sweep",
            Command::PeresMermin => "peres-mermin",
            Command::FreeElectron => "free-electron",
            Command::Measurability => "measurability",
            Command::Converge => "converge",
        }
    }

    fn reports_states(self) -> bool {
        matches!(self, Command::Ground | Command::Excited | Command::Sweep)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Basis in which bound and free states are handed to the Weyl-basis
/// observables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateFrame {
    /// States as constructed (Dirac representation).
    #[default]
    Dirac,
    /// States mapped to the Weyl basis first.
    Weyl,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mj: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_grid: Option<usize>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub quadrature: QuadratureSpec,
    #[serde(default)]
    pub state_frame: StateFrame,
    #[serde(default)]
    pub format: Format,
    /// Adds wall-clock time to the document; output is then not reproducible.
    #[serde(default)]
    pub timing: bool,
}

fn default_alpha() -> f64 {
    crate::FINE_STRUCTURE
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            alpha: default_alpha(),
            n: None,
            kappa: None,
            mj: None,
            sign: None,
            xi: None,
            n_max: None,
            beta: None,
            beta_grid: None,
            seed: 0,
            quadrature: QuadratureSpec::default(),
            state_frame: StateFrame::default(),
            format: Format::default(),
            timing: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::arg(format!("--alpha must lie in (0, 1) (got {})", self.alpha)));
        }
        self.quadrature.validate()?;
        if let Some(s) = self.sign {
            if s != 1 && s != -1 {
                return Err(Error::arg(format!("--sign must be +1 or -1 (got {s})")));
            }
        }
        if let Some(b) = self.beta {
            if !(0.0..1.0).contains(&b) {
                return Err(Error::arg(format!("--beta must lie in [0, 1) (got {b})")));
            }
        }
        if self.beta_grid == Some(0) {
            return Err(Error::arg("--beta-grid needs at least one point"));
        }
        if self.n_max == Some(0) {
            return Err(Error::arg("--n-max must be >= 1"));
        }
        if let Some(xi) = self.xi {
            if !xi.is_finite() {
                return Err(Error::arg("--xi must be finite"));
            }
        }
        Ok(())
    }

    /// The single bound state selected by `--n/--kappa/--mj/--sign`.
    pub fn selected_state(&self, default: (u32, i32, f64)) -> Result<QuantumNumbers> {
        let n = self.n.unwrap_or(default.0);
        let mut kappa = self.kappa.unwrap_or(default.1);
        if let Some(sign) = self.sign {
            if self.kappa.is_some() && kappa.signum() != sign {
                return Err(Error::arg(format!(
                    "--sign {sign} contradicts --kappa {kappa}"
                )));
            }
            kappa = sign * kappa.abs();
        }
        QuantumNumbers::from_mj(n, kappa, self.mj.unwrap_or(default.2))
    }

    fn frame(&self, rho: ReducedSpinDensity) -> ReducedSpinDensity {
        match self.state_frame {
            StateFrame::Dirac => rho,
            StateFrame::Weyl => rho.transformed(&weyl_from_dirac()),
        }
    }

    fn density(&self, qn: &QuantumNumbers) -> Result<ReducedSpinDensity> {
        Ok(self.frame(hydrogen_density(qn, self.alpha, &self.quadrature)?))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub n: u32,
    pub kappa: i32,
    pub mu: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObservableSplit {
    pub label: String,
    pub eigenvalues: Vec<f64>,
    pub negative_weights: Vec<f64>,
    pub mixes_energy_signs: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Measurability {
    pub threshold: f64,
    pub hydrogen_spectrum: Vec<SpectrumEntry>,
    pub hydrogen_all_positive: bool,
    pub beta: f64,
    pub free_observables: Vec<ObservableSplit>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceLevel {
    pub radial_order: usize,
    pub radial_panels: usize,
    /// Unnormalised `int rho^2 (f^2 + g^2) d rho`.
    pub norm_integral: f64,
    /// Quadrature `(1/N) int r^2 f^2 dr` minus `(1 + mu)/2`.
    pub upper_weight_error: f64,
    pub value: f64,
    /// `|value - value at the next level|`; absent on the finest level.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value_step: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm_step: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Convergence {
    pub state: QuantumNumbers,
    pub levels: Vec<ConvergenceLevel>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub params: RunConfig,
    pub results: Vec<InequalityReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audit: Option<AlgebraAudit>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measurability: Option<Measurability>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convergence: Option<Convergence>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_seconds: Option<f64>,
    pub version: String,
}

impl ReportDocument {
    pub fn new(config: &RunConfig) -> Self {
        ReportDocument {
            command: config.command.name().to_string(),
            params: config.clone(),
            results: Vec::new(),
            audit: None,
            measurability: None,
            convergence: None,
            elapsed_seconds: None,
            version: VERSION.to_string(),
        }
    }
}

/// Process exit code for an error: 2 for bad input, 3 for numerical failure.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidArgument(_) => 2,
        Error::Numerical(_) => 3,
        Error::ContractViolation(_) => 1,
    }
}

pub fn execute(config: &RunConfig) -> Result<ReportDocument> {
    config.validate()?;
    let start = Instant::now();
    let mut doc = ReportDocument::new(config);
    let alpha = config.alpha;
    match config.command {
        Command::Audit => doc.audit = Some(audit_algebra()),
        Command::Ground => {
            let mjs = match config.mj {
                Some(mj) => vec![mj],
                None => vec![0.5, -0.5],
            };
            for mj in mjs {
                let qn = QuantumNumbers::from_mj(1, 1, mj)?;
                if config.n.is_some_and(|n| n != 1) || config.kappa.is_some_and(|k| k != 1) {
                    return Err(Error::arg("`ground` is the n = 1, kappa = 1 state"));
                }
                doc.results.push(ground_chsh(&config.density(&qn)?, &qn, alpha)?);
            }
        }
        Command::Excited => {
            let qn = config.selected_state((2, 1, 0.5))?;
            doc.results.push(hydrogen_chsh(&config.density(&qn)?, &qn, alpha, config.xi)?);
        }
        Command::Sweep => {
            for qn in QuantumNumbers::enumerate(config.n_max.unwrap_or(4)) {
                doc.results.push(hydrogen_chsh(&config.density(&qn)?, &qn, alpha, config.xi)?);
            }
        }
        Command::PeresMermin => {
            for qn in QuantumNumbers::enumerate(config.n_max.unwrap_or(3)) {
                doc.results.push(peres_mermin_value(&config.density(&qn)?)?);
            }
            for (k, psi) in random_pure_spinors(config.seed, RANDOM_STATES).iter().enumerate() {
                let rho = ReducedSpinDensity::from_pure(psi, format!("random #{k} seed={}", config.seed))?;
                doc.results.push(peres_mermin_value(&rho)?);
            }
            doc.results.push(peres_mermin_value(&ReducedSpinDensity::maximally_mixed())?);
        }
        Command::FreeElectron => {
            let betas: Vec<f64> = match config.beta_grid {
                Some(1) => vec![0.0],
                Some(n) => (0..n).map(|k| BETA_GRID_MAX * k as f64 / (n - 1) as f64).collect(),
                None => vec![config.beta.unwrap_or(0.0)],
            };
            for b in betas {
                let mut r = free_chsh(b)?;
                if config.state_frame == StateFrame::Weyl {
                    let state = crate::freeparticle::free_state(b, 1)?;
                    let rho = config.frame(ReducedSpinDensity::from_pure(&state.spinor, r.label.clone())?);
                    let params = r.parameters.clone();
                    r = crate::contextuality::chsh_value(&rho, &free_observables(b)?)?.with_parameters(params);
                }
                doc.results.push(r);
            }
        }
        Command::Measurability => doc.measurability = Some(measurability(config)?),
        Command::Converge => doc.convergence = Some(convergence(config)?),
    }
    if config.timing {
        doc.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    }
    Ok(doc)
}

fn measurability(config: &RunConfig) -> Result<Measurability> {
    let hydrogen_spectrum: Vec<SpectrumEntry> = hydrogen_spectrum(config.n_max.unwrap_or(10), config.alpha)?
        .into_iter()
        .map(|(n, kappa, mu)| SpectrumEntry { n, kappa, mu })
        .collect();
    let beta = config.beta.unwrap_or(0.5);
    let mut free = Vec::new();
    for (label, obs) in ["A'", "B'", "C'", "D'"].iter().zip(free_observables(beta)?) {
        let split = energy_split(beta, &obs)?;
        free.push(ObservableSplit {
            label: label.to_string(),
            eigenvalues: split.eigenvectors.iter().map(|e| e.eigenvalue).collect(),
            negative_weights: split.eigenvectors.iter().map(|e| e.negative_weight).collect(),
            mixes_energy_signs: split.mixes_energy_signs(),
        });
    }
    Ok(Measurability {
        threshold: MIXING_THRESHOLD,
        hydrogen_all_positive: hydrogen_spectrum.iter().all(|e| e.mu > 0.0),
        hydrogen_spectrum,
        beta,
        free_observables: free,
    })
}

/// Radial orders of the refinement ladder; the default order sits in the
/// middle so the study shows behaviour on both sides of it.
pub const CONVERGE_ORDERS: [usize; 6] = [4, 8, 16, 32, 48, 64];

fn convergence(config: &RunConfig) -> Result<Convergence> {
    let qn = config.selected_state((1, 1, 0.5))?;
    let (wf_exact, _) = radial_weights(&qn, config.alpha)?;
    let radial = crate::hydrogen::RadialSolution::new(qn.n, qn.kappa, config.alpha)?;
    let mut levels = Vec::new();
    for order in CONVERGE_ORDERS {
        let spec = QuadratureSpec { radial_order: order, ..config.quadrature };
        let rho = config.frame(hydrogen_density(&qn, config.alpha, &spec)?);
        let value = if qn.n == 1 {
            ground_chsh(&rho, &qn, config.alpha)?.value
        } else {
            hydrogen_chsh(&rho, &qn, config.alpha, config.xi)?.value
        };
        let (ff, gg) = radial.moments(&spec);
        levels.push(ConvergenceLevel {
            radial_order: order,
            radial_panels: spec.radial_panels,
            norm_integral: (ff + gg) * radial.rho_per_r.powi(3),
            upper_weight_error: ff / (ff + gg) - wf_exact,
            value,
            value_step: None,
            norm_step: None,
        });
    }
    for k in 0..levels.len() - 1 {
        let (v, nrm) = (levels[k + 1].value, levels[k + 1].norm_integral);
        levels[k].value_step = Some((levels[k].value - v).abs());
        levels[k].norm_step = Some((levels[k].norm_integral - nrm).abs());
    }
    Ok(Convergence { state: qn, levels })
}

/// Rounds to 15 significant digits.
pub fn round_sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

fn round_numbers(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if n.is_f64() {
                if let Some(x) = n.as_f64() {
                    if let Some(r) = serde_json::Number::from_f64(round_sig15(x)) {
                        *n = r;
                    }
                }
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_numbers),
        Value::Object(o) => o.values_mut().for_each(round_numbers),
        _ => {}
    }
}

fn fmt_num(x: f64) -> String {
    let v = round_sig15(x);
    serde_json::Number::from_f64(v).map_or_else(|| v.to_string(), |n| n.to_string())
}

fn fmt_opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn render(doc: &ReportDocument, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(doc).map_err(|e| Error::Numerical(e.to_string()))?;
            round_numbers(&mut v);
            let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::Numerical(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let state_rows = doc.params.command.reports_states();
            let io = |e: csv::Error| Error::Numerical(e.to_string());
            if state_rows {
                w.write_record(STATE_CSV_HEADER).map_err(io)?;
            } else {
                w.write_record(GENERIC_CSV_HEADER).map_err(io)?;
            }
            for r in &doc.results {
                let p = &r.parameters;
                let row: Vec<String> = if state_rows {
                    vec![
                        fmt_opt(p.n),
                        fmt_opt(p.kappa),
                        p.mj.map(fmt_num).unwrap_or_default(),
                        fmt_opt(p.sign),
                        p.mu.map(fmt_num).unwrap_or_default(),
                        p.xi_star.map(fmt_num).unwrap_or_default(),
                        fmt_num(r.value),
                        fmt_num(r.bound),
                        r.violated.to_string(),
                    ]
                } else {
                    let kind = serde_json::to_value(r.kind)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_owned))
                        .unwrap_or_default();
                    vec![kind, r.label.clone(), fmt_num(r.value), fmt_num(r.bound), r.violated.to_string()]
                };
                w.write_record(&row).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Numerical(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Numerical(e.to_string()))
        }
    }
}

/// Parses a JSON run configuration; omitted fields take their defaults.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    serde_json::from_str(text).map_err(|e| Error::arg(format!("malformed run config: {e}")))
}

/// Parses a JSON report produced by [`render`].
pub fn parse_json(text: &str) -> Result<ReportDocument> {
    serde_json::from_str(text).map_err(|e| Error::arg(format!("malformed report: {e}")))
}

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use relctx::cli::{execute, exit_code, render, Command, Format, RunConfig, StateFrame};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    /// Exact check of the gamma-matrix algebra and the Peres-Mermin square.
    Audit,
    /// CHSH-like value of the hydrogen ground state (both m_j by default).
    Ground,
    /// CHSH-like value of one excited state at the optimal (or given) xi.
    Excited,
    /// Every bound state up to --n-max (default 4).
    Sweep,
    /// Peres-Mermin value for hydrogen, random and maximally mixed states.
    PeresMermin,
    /// CHSH-like value of the free electron at --beta or over --beta-grid.
    FreeElectron,
    /// Energy-sign content of the bound spectrum and the free observables.
    Measurability,
    /// Quadrature refinement study for one state.
    Converge,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Audit => Command::Audit,
            Cmd::Ground => Command::Ground,
            Cmd::Excited => Command::Excited,
            Cmd::Sweep => Command::Sweep,
            Cmd::PeresMermin => Command::PeresMermin,
            Cmd::FreeElectron => Command::FreeElectron,
            Cmd::Measurability => Command::Measurability,
            Cmd::Converge => Command::Converge,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FrameArg {
    Dirac,
    Weyl,
}

fn parse_sign(s: &str) -> Result<i32, String> {
    match s {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        _ => Err(format!("expected +1 or -1, got `{s}`")),
    }
}

/// Contextuality inequalities for relativistic spin-1/2 states.
#[derive(Debug, Parser)]
#[command(name = "relctx", version)]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// Coupling strength (defaults to the fine-structure constant).
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    kappa: Option<i32>,
    #[arg(long, allow_negative_numbers = true)]
    mj: Option<f64>,
    /// Sign of kappa; overrides the sign of --kappa when that is absent.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
    sign: Option<i32>,
    #[arg(long, allow_negative_numbers = true)]
    xi: Option<f64>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    beta: Option<f64>,
    /// Number of evenly spaced velocities on [0, 0.999].
    #[arg(long)]
    beta_grid: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    quad_radial_order: Option<usize>,
    #[arg(long)]
    quad_panels: Option<usize>,
    #[arg(long)]
    quad_cutoff: Option<f64>,
    #[arg(long)]
    quad_theta: Option<usize>,
    #[arg(long)]
    quad_phi: Option<usize>,
    #[arg(long, value_enum, default_value = "dirac")]
    state_frame: FrameArg,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Record wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

impl Args {
    fn config(&self) -> RunConfig {
        let mut c = RunConfig::new(self.command.into());
        if let Some(a) = self.alpha {
            c.alpha = a;
        }
        c.n = self.n;
        c.kappa = self.kappa;
        c.mj = self.mj;
        c.sign = self.sign;
        c.xi = self.xi;
        c.n_max = self.n_max;
        c.beta = self.beta;
        c.beta_grid = self.beta_grid;
        c.seed = self.seed;
        let q = &mut c.quadrature;
        q.radial_order = self.quad_radial_order.unwrap_or(q.radial_order);
        q.radial_panels = self.quad_panels.unwrap_or(q.radial_panels);
        q.radial_cutoff = self.quad_cutoff.or(q.radial_cutoff);
        q.theta_order = self.quad_theta.unwrap_or(q.theta_order);
        q.phi_order = self.quad_phi.unwrap_or(q.phi_order);
        c.state_frame = match self.state_frame {
            FrameArg::Dirac => StateFrame::Dirac,
            FrameArg::Weyl => StateFrame::Weyl,
        };
        c.format = match self.format {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        };
        c.timing = self.timing;
        c
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = args.config();
    let text = match execute(&config).and_then(|doc| render(&doc, config.format)) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("relctx: {e}");
            return ExitCode::from(exit_code(&e) as u8);
        }
    };
    match &args.output {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("relctx: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}

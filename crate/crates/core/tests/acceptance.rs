//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::f64::consts::SQRT_2;
use std::time::Instant;

use relctx::clifford::audit_algebra;
use relctx::contextuality::{
    ground_chsh, hydrogen_chsh, hydrogen_density, kappa_positive_lower_bound, optimal_xi,
    peres_mermin_value, CHSH_BOUND, PERES_MERMIN_BOUND,
};
use relctx::freeparticle::{energy_split, free_chsh, free_observables, hydrogen_spectrum};
use relctx::hydrogen::apply_k_eigencheck;
use relctx::spindensity::{radial_weights, radial_weights_quadrature, random_pure_spinors};
use relctx::{QuadratureSpec, QuantumNumbers, ReducedSpinDensity, FINE_STRUCTURE as A};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn ground_value() -> f64 {
    SQRT_2 * (1.0 + (1.0 - A * A).sqrt())
}

fn c1_ground_state() -> Outcome {
    let start = Instant::now();
    let qn = QuantumNumbers::new(1, 1, 1).unwrap();
    let rho = hydrogen_density(&qn, A, &QuadratureSpec::default()).unwrap();
    let v = ground_chsh(&rho, &qn, A).unwrap().value;
    let secs = start.elapsed().as_secs_f64();
    let err = (v - ground_value()).abs();
    let err_quoted = (v - 2.82839).abs();
    outcome(
        err < 5e-5 && err_quoted < 5e-5 && secs < 1.0,
        format!("value {v:.8}, |v - sqrt2(1+sqrt(1-a^2))| = {err:.1e}, |v - 2.82839| = {err_quoted:.1e}, {secs:.3} s"),
    )
}

fn c2_kramers_partner() -> Outcome {
    let spec = QuadratureSpec::default();
    let up = QuantumNumbers::new(1, 1, 1).unwrap();
    let down = QuantumNumbers::new(1, 1, -1).unwrap();
    let vu = ground_chsh(&hydrogen_density(&up, A, &spec).unwrap(), &up, A).unwrap().value;
    let vd = ground_chsh(&hydrogen_density(&down, A, &spec).unwrap(), &down, A).unwrap().value;
    let err = (vd - vu).abs().max((vd - ground_value()).abs());
    outcome(err < 5e-5, format!("m_j=-1/2 value {vd:.8}, m_j=+1/2 value {vu:.8}, max deviation {err:.1e}"))
}

fn c3_closed_form() -> Outcome {
    let start = Instant::now();
    let spec = QuadratureSpec::default();
    let mut worst = (0.0f64, String::new());
    let states = QuantumNumbers::enumerate(4);
    for qn in &states {
        let rho = hydrogen_density(qn, A, &spec).unwrap();
        let v = hydrogen_chsh(&rho, qn, A, None).unwrap().value;
        let star = optimal_xi(qn, A).unwrap().value_star;
        let rel = (v - star).abs() / star;
        if rel >= worst.0 {
            worst = (rel, qn.to_string());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        worst.0 < 1e-8 && secs < 60.0,
        format!("{} states, worst relative error {:.1e} ({}), {secs:.1} s", states.len(), worst.0, worst.1),
    )
}

fn c4_violation_sweep() -> Outcome {
    let spec = QuadratureSpec::default();
    let states = QuantumNumbers::enumerate(5);
    let mut min_value = f64::INFINITY;
    let mut min_margin = f64::INFINITY;
    let mut ok = true;
    for qn in &states {
        let rho = hydrogen_density(qn, A, &spec).unwrap();
        let r = hydrogen_chsh(&rho, qn, A, None).unwrap();
        ok &= r.value > CHSH_BOUND && r.violated;
        min_value = min_value.min(r.value);
        if qn.kappa > 0 {
            let margin = r.value - kappa_positive_lower_bound(qn.l(), A);
            ok &= margin > 0.0;
            min_margin = min_margin.min(margin);
        }
    }
    outcome(
        ok,
        format!("{} states, min value {min_value:.6}, min margin over kappa>0 lower bound {min_margin:.2e}", states.len()),
    )
}

fn c5_peres_mermin() -> Outcome {
    let spec = QuadratureSpec::default();
    let mut values = Vec::new();
    let mut bounds_ok = true;
    let mut push = |rho: &ReducedSpinDensity| {
        let r = peres_mermin_value(rho).unwrap();
        bounds_ok &= r.bound == PERES_MERMIN_BOUND && r.violated;
        values.push(r.value);
    };
    let hydrogen = QuantumNumbers::enumerate(3);
    for qn in &hydrogen {
        push(&hydrogen_density(qn, A, &spec).unwrap());
    }
    for psi in random_pure_spinors(0, 100) {
        push(&ReducedSpinDensity::from_pure(&psi, "random").unwrap());
    }
    push(&ReducedSpinDensity::maximally_mixed());
    let worst = values.iter().map(|v| (v - 6.0).abs()).fold(0.0, f64::max);
    outcome(
        worst < 1e-10 && bounds_ok,
        format!("{} hydrogen + 100 random + mixed, max |value - 6| = {worst:.1e}, bound 4", hydrogen.len()),
    )
}

fn c6_free_electron() -> Outcome {
    let mut worst = 0.0f64;
    let mut above = true;
    for k in 0..1000 {
        let b = 0.999 * k as f64 / 999.0;
        let v = free_chsh(b).unwrap().value;
        worst = worst.max((v - 2.0 * (2.0 - b * b).sqrt()).abs());
        above &= v > 2.0;
    }
    let rest = (free_chsh(0.0).unwrap().value - 2.0 * SQRT_2).abs();
    let edge = free_chsh(0.999).unwrap().value;
    outcome(
        worst < 1e-12 && rest < 1e-12 && above && edge > 2.0,
        format!("max |value - 2 sqrt(2 - b^2)| = {worst:.1e} on 1000 points, value(0.999) = {edge:.6}"),
    )
}

fn c7_algebra_audit() -> Outcome {
    let audit = audit_algebra();
    let failed: Vec<&str> = audit.failures().map(|c| c.name.as_str()).collect();
    outcome(
        audit.all_passed(),
        format!("{} exact checks, {} failed {:?}", audit.checks.len(), failed.len(), failed),
    )
}

fn c8_radial_identities() -> Outcome {
    let spec = QuadratureSpec::default();
    let mut worst = 0.0f64;
    let states = QuantumNumbers::enumerate(4);
    for qn in &states {
        let (wf, wg) = radial_weights_quadrature(qn, A, &spec).unwrap();
        let (ef, eg) = radial_weights(qn, A).unwrap();
        worst = worst.max((wf - ef).abs()).max((wg - eg).abs());
    }
    outcome(worst < 1e-8, format!("{} states, max deviation from (1 +- mu)/2 = {worst:.1e}", states.len()))
}

fn c9_k_eigencheck() -> Outcome {
    let mut worst = 0.0f64;
    let mut worst_sq = 0.0f64;
    for qn in QuantumNumbers::enumerate(4) {
        let c = apply_k_eigencheck(&qn).unwrap();
        let expected = (qn.sign() * qn.abs_kappa() as i32) as f64;
        let j = qn.j();
        worst = worst.max((c.computed - expected).abs()).max(c.residual);
        worst_sq = worst_sq
            .max((c.k_squared_computed - (j * (j + 1.0) + 0.25)).abs())
            .max(c.k_squared_residual);
    }
    outcome(
        worst < 1e-10 && worst_sq < 1e-10,
        format!("max |K - sign|kappa|| = {worst:.1e}, max |K^2 - j(j+1) - 1/4| = {worst_sq:.1e}"),
    )
}

fn c10_measurability() -> Outcome {
    let spectrum = hydrogen_spectrum(10, A).unwrap();
    let positive = spectrum.iter().all(|&(_, _, mu)| mu > 0.0);
    let mut mixing = Vec::new();
    for obs in free_observables(0.5).unwrap() {
        let split = energy_split(0.5, &obs).unwrap();
        mixing.push(
            split
                .eigenvectors
                .iter()
                .any(|w| w.negative_weight > 0.0 && w.negative_weight < 1.0),
        );
    }
    outcome(
        positive && mixing.iter().all(|&m| m),
        format!("{} levels with mu > 0: {positive}; A',B',C',D' mix at beta=0.5: {mixing:?}", spectrum.len()),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("ground-state violation", c1_ground_state),
        ("Kramers partner", c2_kramers_partner),
        ("closed-form agreement n<=4", c3_closed_form),
        ("violation sweep n<=5", c4_violation_sweep),
        ("Peres-Mermin state independence", c5_peres_mermin),
        ("free-electron curve", c6_free_electron),
        ("algebra audit", c7_algebra_audit),
        ("radial identities n<=4", c8_radial_identities),
        ("Dirac-operator K check n<=4", c9_k_eigencheck),
        ("measurability contrast", c10_measurability),
    ];
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.passed {
            failures += 1;
        }
        println!("{} [{}] {name}: {}", if o.passed { "PASS" } else { "FAIL" }, k + 1, o.detail);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

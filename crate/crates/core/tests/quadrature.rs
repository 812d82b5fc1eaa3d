//! Paneled Gauss-Legendre against the regularised incomplete gamma function:
//! `int_0^c rho^(2 nu) e^-rho d rho = Gamma(2 nu + 1) P(2 nu + 1, c)`.

use relctx::specfun::paneled_rule;
use statrs::function::gamma::{gamma, gamma_lr};

const CUTOFF: f64 = 70.0;
const FLOOR: f64 = 1e-13;

fn exact(nu: f64) -> f64 {
    let s = 2.0 * nu + 1.0;
    gamma(s) * gamma_lr(s, CUTOFF)
}

fn rel_error(nu: f64, panels: usize, order: usize) -> f64 {
    let approx: f64 = paneled_rule(panels, order, CUTOFF)
        .into_iter()
        .map(|(x, w)| w * x.powf(2.0 * nu) * (-x).exp())
        .sum();
    ((approx - exact(nu)) / exact(nu)).abs()
}

#[test]
fn radial_rule_converges_monotonically_in_panel_count() {
    for k in 0..=60 {
        let nu = 0.99 + (4.0 - 0.99) * k as f64 / 60.0;
        for order in [16, 32] {
            let errs: Vec<f64> = (1..=10).map(|p| rel_error(nu, p, order)).collect();
            for w in errs.windows(2) {
                assert!(
                    w[1] <= w[0] || w[1] < FLOOR,
                    "nu={nu} order={order}: errors {errs:?}"
                );
            }
            assert!(errs[9] < 1e-10, "nu={nu} order={order}: {errs:?}");
        }
    }
}

#[test]
fn default_rule_matches_incomplete_gamma() {
    for nu in [0.999_97, 1.5, 1.999_99, 2.5, 3.0, 4.0] {
        let e = rel_error(nu, 4, 32);
        assert!(e < 1e-10, "nu={nu}: {e:e}");
    }
}

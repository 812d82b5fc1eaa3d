use serde::{Deserialize, Serialize};

use super::{exact_family, exact_gamma, exact_peres_mermin_grid, ExactMatrix4, Family, GaussInt};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of the exact structural checks. Failures are entries, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraAudit {
    pub checks: Vec<AuditCheck>,
}

impl AlgebraAudit {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: String, passed: bool, detail: impl Into<String>) {
        self.checks.push(AuditCheck {
            name,
            passed,
            detail: detail.into(),
        });
    }
}

const AXES: [&str; 3] = ["x", "y", "z"];

/// Runs every structural identity in integer-complex arithmetic.
pub fn audit_algebra() -> AlgebraAudit {
    let mut audit = AlgebraAudit { checks: Vec::new() };
    let id = ExactMatrix4::identity();

    for fam in Family::ALL {
        let comps = exact_family(fam);
        for (axis, m) in AXES.iter().zip(&comps) {
            audit.push(
                format!("{}_{axis} hermitian", fam.name()),
                m.adjoint() == *m,
                "M = M^dagger",
            );
            audit.push(
                format!("{}_{axis} involution", fam.name()),
                *m * *m == id,
                "M^2 = 1",
            );
        }
        for k in 0..3 {
            let (a, b, c) = (comps[k], comps[(k + 1) % 3], comps[(k + 2) % 3]);
            audit.push(
                format!("{} cyclic {}{}", fam.name(), AXES[k], AXES[(k + 1) % 3]),
                a * b == c.scale(GaussInt::I),
                format!("{0}_{1} {0}_{2} = i {0}_{3}", fam.name(), AXES[k], AXES[(k + 1) % 3], AXES[(k + 2) % 3]),
            );
        }
    }

    for (pair, (fa, fb)) in [
        (Family::Gamma, Family::GammaPrime),
        (Family::Sigma, Family::SigmaPrime),
    ]
    .into_iter()
    .enumerate()
    {
        let (ca, cb) = (exact_family(fa), exact_family(fb));
        for i in 0..3 {
            for j in 0..3 {
                audit.push(
                    format!("[{}_{}, {}_{}] = 0", fa.name(), AXES[i], fb.name(), AXES[j]),
                    ca[i].commutator(&cb[j]).is_zero(),
                    if pair == 0 { "cross-family commutator" } else { "tensor factors commute" },
                );
            }
        }
    }

    let gammas: Vec<ExactMatrix4> = (0..4).map(|k| exact_gamma(k).expect("valid index")).collect();
    for i in 0..4 {
        for j in (i + 1)..4 {
            audit.push(
                format!("{{g{i}, g{j}}} = 0"),
                gammas[i].anticommutator(&gammas[j]).is_zero(),
                "distinct gamma matrices anticommute",
            );
        }
    }
    audit.push("g0^2 = 1".into(), gammas[0] * gammas[0] == id, "metric +1");
    for k in 1..4 {
        audit.push(format!("g{k}^2 = -1"), gammas[k] * gammas[k] == -id, "metric -1");
    }

    let grid = exact_peres_mermin_grid();
    let lines: Vec<(String, [ExactMatrix4; 3], bool)> = (0..3)
        .map(|r| (format!("row {}", r + 1), grid[r], false))
        .chain((0..3).map(|c| {
            (
                format!("column {}", c + 1),
                [grid[0][c], grid[1][c], grid[2][c]],
                c == 2,
            )
        }))
        .collect();
    for (name, ops, negative) in lines {
        let commuting = (0..3).all(|i| (0..3).all(|j| ops[i].commutator(&ops[j]).is_zero()));
        audit.push(format!("Peres-Mermin {name} commutes"), commuting, "context compatibility");
        let product = ops[0] * ops[1] * ops[2];
        let (want, sign) = if negative { (-id, "-1") } else { (id, "+1") };
        audit.push(
            format!("Peres-Mermin {name} product"),
            product == want,
            format!("product = {sign}"),
        );
        for (k, op) in ops.iter().enumerate() {
            audit.push(
                format!("Peres-Mermin {name} entry {} dichotomic", k + 1),
                *op * *op == id && op.adjoint() == *op,
                "hermitian involution",
            );
        }
    }

    audit
}

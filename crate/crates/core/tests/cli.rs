use std::process::{Command, Output};

use relctx::cli::{execute, parse_json, render, Command as Cmd, Format, RunConfig};

fn relctx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relctx")).args(args).output().expect("spawn relctx")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn ground_reports_violation_of_bound_two() {
    let out = relctx(&["ground"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"bound\": 2.0"));
    assert!(text.contains("\"violated\": true"));
    let doc = parse_json(&text).unwrap();
    assert_eq!(doc.results.len(), 2);
    for r in &doc.results {
        assert!((r.value - 2.82839).abs() < 5e-6, "{}", r.value);
    }
}

#[test]
fn json_round_trips() {
    for cmd in [Cmd::Ground, Cmd::Audit, Cmd::Measurability, Cmd::Converge] {
        let doc = execute(&RunConfig::new(cmd)).unwrap();
        let text = render(&doc, Format::Json).unwrap();
        let back = parse_json(&text).unwrap();
        assert_eq!(render(&back, Format::Json).unwrap(), text, "{cmd:?}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["peres-mermin", "--seed", "42", "--n-max", "2"][..],
        &["sweep", "--n-max", "2", "--format", "csv"][..],
        &["free-electron", "--beta-grid", "5"][..],
    ] {
        let a = relctx(args);
        let b = relctx(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn sweep_csv_has_fixed_header_and_all_violations() {
    let out = relctx(&["sweep", "--n-max", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,kappa,mj,sign,mu,xi_star,value,bound,violated"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2 + 8 + 18);
    assert!(rows.iter().all(|r| r.ends_with(",2.0,true")));
}

#[test]
fn free_electron_at_rest_gives_two_root_two() {
    let doc = parse_json(&stdout(&relctx(&["free-electron", "--beta", "0"]))).unwrap();
    assert!((doc.results[0].value - 2.0 * 2f64.sqrt()).abs() < 1e-13);
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("relctx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("audit.json");
    let out = relctx(&["audit", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc = parse_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(doc.audit.unwrap().all_passed());
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn exit_codes() {
    assert_eq!(relctx(&["ground", "--alpha", "1.5"]).status.code(), Some(2));
    assert_eq!(relctx(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(relctx(&["excited", "--n", "1", "--kappa", "-1"]).status.code(), Some(2));
    assert_eq!(relctx(&["ground", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(relctx(&["sweep", "--n-max", "2", "--quad-theta", "1"]).status.code(), Some(3));
    assert_eq!(relctx(&["excited", "--n", "3", "--kappa", "-2", "--mj", "-1.5"]).status.code(), Some(0));
}

#[test]
fn converge_steps_shrink_past_default() {
    let doc = execute(&RunConfig::new(Cmd::Converge)).unwrap();
    let levels = doc.convergence.unwrap().levels;
    let default = levels.iter().position(|l| l.radial_order == 32).unwrap();
    let steps: Vec<f64> = levels[default..].iter().filter_map(|l| l.value_step).collect();
    for w in steps.windows(2) {
        assert!(w[1] <= w[0] || w[1] < 1e-12, "{steps:?}");
    }
    let norms: Vec<f64> = levels.iter().filter_map(|l| l.norm_step).collect();
    for w in norms.windows(2) {
        assert!(w[1] < w[0], "{norms:?}");
    }
    for l in &levels {
        assert!((l.value - 2.82839).abs() < 5e-5);
    }
}

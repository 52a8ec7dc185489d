use std::process::{Command, Output};

use serde_json::Value;

fn qcurv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcurv")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn statuses(v: &Value) -> Vec<String> {
    v["records"].as_array().unwrap().iter().map(|r| r["status"].as_str().unwrap().to_string()).collect()
}

#[test]
fn symbolic_pointwise_is_exact() {
    let out = qcurv(&["verify-pointwise", "--case", "general", "--n", "symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "qcurv-report/1");
    assert!(statuses(&v).iter().all(|s| s == "exact-zero"));
    assert!(v["records"].as_array().unwrap().iter().all(|r| r["anchor"].is_string()));
}

#[test]
fn dim4_ibp_has_twelve_certificates() {
    let out = qcurv(&["verify-ibp", "--case", "dim4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let certs = v["records"].as_array().unwrap().iter().filter(|r| r["certificate"].is_object()).count();
    assert_eq!(certs, 12);
}

#[test]
fn mobius_solution_checks() {
    let out = qcurv(&["check-solution", "--geometry", "sphere", "--case", "dim4", "--s", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for r in v["records"].as_array().unwrap() {
        let id = r["id"].as_str().unwrap();
        if id.ends_with("pde-residual") || id.ends_with("theta2-sup") {
            assert!(r["residual"].as_f64().unwrap() < 1e-8, "{id}");
        }
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify-pointwise", "--case", "dim4", "--n", "7"][..],
        &["verify-integral", "--geometry", "s2xs2", "--case", "general"],
        &["verify-integral", "--case", "general", "--n", "symbolic"],
        &["check-solution", "--profile", "x", "--s", "0.5"],
        &["solve", "--p", "abc"],
        &["no-such-command"],
    ] {
        assert_eq!(qcurv(args).status.code(), Some(2), "{args:?}");
    }
    let out = qcurv(&["verify-integral", "--profile", "x^"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 2"));
    // a non-positive profile where positivity is required
    let out = qcurv(&["verify-integral", "--case", "general", "--n", "5", "--profile", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failing_checks_exit_one() {
    let out = qcurv(&["gm-scan", "--profile", "4*x^2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(statuses(&json(&out)), ["fail"]);
    let out = qcurv(&["check-solution", "--profile", "1/3*x^3 - x"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_are_deterministic_and_written_to_out() {
    let a = qcurv(&["solve", "--geometry", "s2xs2", "--seed", "5", "--nodes", "120"]);
    let b = qcurv(&["solve", "--geometry", "s2xs2", "--seed", "5", "--nodes", "120"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert!(!v["traces"][0]["residuals"].as_array().unwrap().is_empty());

    let path = std::env::temp_dir().join(format!("qcurv-report-{}.json", std::process::id()));
    let out = qcurv(&["verify-integral", "--seed", "3", "--nodes", "100", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["command"], "verify-integral");
    assert_eq!(written["records"].as_array().unwrap().len(), 13);
    let _ = std::fs::remove_file(path);
}

#[test]
fn newton_on_the_sphere_finds_a_mobius_member() {
    let out = qcurv(&["solve", "--geometry", "sphere", "--case", "dim4", "--seed", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let ids: Vec<&str> = v["records"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"S^4/mobius-match"), "{ids:?}");
}

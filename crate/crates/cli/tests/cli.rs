use std::path::PathBuf;
use std::process::{Command, Output};

fn jetworks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jetworks")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = jetworks(&full);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    serde_json::from_str(&stdout(&o)).expect("output is JSON")
}

/// Asserts the exit code and that stderr is a single `error: <tag>: ...` line.
fn fails_with(args: &[&str], code: i32, needle: &str) {
    let o = jetworks(args);
    assert_eq!(o.status.code(), Some(code), "{args:?}: {}", stderr(&o));
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error: "), "{err}");
    assert!(err.contains(needle), "{err}");
    assert!(o.stdout.is_empty());
}

fn write_csv(name: &str, f: impl Fn(f64) -> (f64, f64)) -> PathBuf {
    let path = std::env::temp_dir().join(format!("jetworks-{}-{name}.csv", std::process::id()));
    let mut text = String::from("t,gm,gn\n");
    for i in 0..2001 {
        let t = -1.0 + i as f64 / 1000.0;
        let (a, b) = f(t);
        text.push_str(&format!("{t},{a},{b}\n"));
    }
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn cusp_jet_recovery() {
    let o = jetworks(&[
        "jet", "recover", "--m", "2", "--n", "3", "--a", "0,0,1", "--b", "0,0,0,1", "--order", "6", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"coeffs\":[\"0\",\"1\",\"0\",\"0\",\"0\"],\"guaranteed_order\":4}\n");
}

#[test]
fn jet_recovery_rejects_valuation_mismatch() {
    fails_with(
        &["jet", "recover", "--m", "2", "--n", "3", "--a", "0,0,1", "--b", "0,0,0,0,1", "--order", "6"],
        2,
        "valuation law Mn=Nm violated",
    );
}

#[test]
fn jet_recovery_handles_rationals_and_negatives() {
    // g = -1/2 + t: g^2 = 1/4 - t + t^2, g^3 = -1/8 + 3/4 t - 3/2 t^2 + t^3
    let v = json(&["jet", "recover", "--m", "2", "--n", "3", "--a", "1/4,-1,1,0", "--b", "-1/8,3/4,-3/2,1"]);
    assert_eq!(v["coeffs"], serde_json::json!(["-1/2", "1", "0", "0"]));
    assert_eq!(v["guaranteed_order"], 3);
}

#[test]
fn semigroup_commands() {
    let o = jetworks(&["semigroup", "frobenius", "3", "5"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "7\n".to_string()));

    let v = json(&["semigroup", "bezout", "3", "5"]);
    let (a, b) = (v["a"].as_i64().unwrap(), v["b"].as_i64().unwrap());
    assert_eq!(a * 3 + b * 5, 1);
    assert!(a < 0 && b > 0);

    let v = json(&["semigroup", "represent", "3", "5", "8"]);
    assert_eq!((v["c1"].as_u64(), v["c2"].as_u64()), (Some(1), Some(1)));
    let v = json(&["semigroup", "represent", "3", "5", "7"]);
    assert_eq!(v["representable"], false);

    fails_with(&["semigroup", "bezout", "4", "6"], 1, "coprime_required");
    fails_with(&["semigroup", "frobenius", "1", "5"], 1, "no_frobenius");
}

#[test]
fn curve_classification() {
    let v = json(&["curve", "classify", "--x", "t^3", "--y", "t^2"]);
    assert_eq!(v["facts"]["IMMERSION"], "FALSE");
    assert_eq!(v["facts"]["INDUCTION"], "TRUE");
    assert_eq!(v["facts"]["WEAK_EMBEDDING"], "FALSE");
    assert_eq!(v["immersion"]["witness"], serde_json::json!({"kind": "parameter", "t": "0"}));

    let v = json(&["curve", "classify", "--x", "t^2", "--y", "t^4"]);
    assert_eq!(v["injectivity"]["value"], "FALSE");
    let w = &v["injectivity"]["witness"];
    assert_eq!(w["kind"], "pair");

    let v = json(&["curve", "classify", "--x", "t^2", "--y", "t^3", "--domain", "0..inf"]);
    assert_eq!(v["injectivity"]["value"], "TRUE");
    assert_eq!(v["immersion"]["value"], "TRUE");
    assert_eq!(v["domain"], "(0..inf)");

    fails_with(&["curve", "classify", "--x", "t^^2", "--y", "t"], 1, "syntax");
    fails_with(&["curve", "classify", "--x", "2", "--y", "3"], 1, "degenerate_curve");
    fails_with(&["curve", "classify", "--x", "t", "--y", "t", "--domain", "1..0"], 1, "invalid_domain");
}

#[test]
fn degree_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_jetworks"))
        .args(["curve", "classify", "--x", "t^4", "--y", "t^3"])
        .env("JETWORKS_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).starts_with("error: resource_limit"));

    let o = Command::new(env!("CARGO_BIN_EXE_jetworks"))
        .args(["curve", "classify", "--x", "t^4", "--y", "t^3"])
        .env("JETWORKS_MAX_DEGREE", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn monomial_and_catalog() {
    let v = json(&["classify", "monomial", "2", "4"]);
    assert_eq!(v["facts"]["INDUCTION"], "FALSE");
    assert_eq!(v["facts"]["INJECTIVE"], "FALSE");
    assert_eq!(v["injectivity_witness"], serde_json::json!([-1, 1]));

    let v = json(&["catalog", "list"]);
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["cusp", "figure_eight", "circle", "joris_preissmann_h", "irrational_line"]);
    for name in names {
        let v = json(&["catalog", "check", name]);
        assert_eq!(v["passed"], true, "{name}");
    }
    fails_with(&["catalog", "check", "lemniscate"], 1, "usage");
}

#[test]
fn probe_from_csv() {
    let smooth = write_csv("smooth", |t| (t * t, t * t * t));
    let v = json(&["probe", "--input", smooth.to_str().unwrap(), "--m", "2", "--n", "3"]);
    assert_eq!(v["report"]["verdict"], serde_json::json!({"verdict": "SMOOTH_UP_TO", "order": 4}));

    let corner = write_csv("corner", |t| (t * t, t.abs().powi(3)));
    let v = json(&["probe", "--input", corner.to_str().unwrap(), "--m", "2", "--n", "3"]);
    assert_eq!(v["report"]["verdict"]["verdict"], "NONSMOOTH_AT");
    assert!(v["report"]["verdict"]["order"].as_u64().unwrap() <= 3);

    let bad = write_csv("bad", |t| (t * t, t * t * t + 0.5));
    fails_with(&["probe", "--input", bad.to_str().unwrap(), "--m", "2", "--n", "3"], 2, "inconsistent_samples");
    fails_with(&["probe", "--input", smooth.to_str().unwrap(), "--m", "2", "--n", "4"], 1, "coprime_required");
    fails_with(&["probe", "--input", "/nonexistent/file.csv", "--m", "2", "--n", "3"], 1, "usage");

    for p in [smooth, corner, bad] {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &["curve", "classify", "--x", "t^2 - 1", "--y", "t^3 - t", "--format", "json"],
        &["curve", "classify", "--x", "t^2", "--y", "t^3 - 2*t"],
        &["catalog", "list", "--format", "json"],
        &["semigroup", "represent", "5", "7", "100", "--format", "json"],
    ];
    for args in cases {
        assert_eq!(jetworks(args).stdout, jetworks(args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors() {
    fails_with(&["jet", "recover", "--m", "2"], 1, "usage");
    fails_with(&["semigroup", "frobenius", "3", "5", "--verbose"], 1, "usage");
    fails_with(&["jet", "recover", "--m", "2", "--n", "3", "--a", "0,x", "--b", "0"], 1, "malformed");
    assert_eq!(jetworks(&["--help"]).status.code(), Some(0));
    assert_eq!(jetworks(&["--version"]).status.code(), Some(0));
}

use std::path::Path;
use std::process::Command;

use bzinfo::cli::{run, CommandResult};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, Value) {
    let CommandResult { code, stdout } = run(std::iter::once("bzinfo").chain(args.iter().copied()));
    let json = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {stdout}"));
    (code, json)
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

#[test]
fn gen_then_validate_every_family() {
    let dir = tempfile::tempdir().unwrap();
    for (family, d) in [("mub", "3"), ("sic", "2"), ("sic", "3"), ("mum", "4"), ("gsic", "3")] {
        let file = p(dir.path(), &format!("{family}{d}.json"));
        let (code, out) = call(&["gen", family, "-d", d, "-o", &file]);
        assert_eq!(code, 0, "{out}");
        let (code, report) = call(&["validate", &file]);
        assert_eq!(code, 0, "{report}");
        assert_eq!(report["passed"], Value::Bool(true));
    }
}

#[test]
fn gen_sic_by_search_and_explicit_t() {
    let dir = tempfile::tempdir().unwrap();
    let file = p(dir.path(), "sic4.json");
    let (code, out) = call(&["gen", "sic", "-d", "4", "--seed", "3", "-o", &file]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out["search"]["success"], Value::Bool(true));
    assert_eq!(call(&["validate", &file]).0, 0);
    let (code, out) = call(&["gen", "mum", "-d", "3", "--t", "0.05"]);
    assert_eq!(code, 0);
    assert_eq!(out["t"].as_f64(), Some(0.05));
    let (code, out) = call(&["gen", "mum", "-d", "3", "--t", "5"]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "out_of_range");
}

#[test]
fn validate_reports_defective_scheme() {
    let dir = tempfile::tempdir().unwrap();
    let file = p(dir.path(), "m.json");
    assert_eq!(call(&["gen", "mub", "-d", "3", "-o", &file]).0, 0);
    let mut scheme: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    // scale the first diagonal entry of one element by 1.01
    let entry = &mut scheme["povms"][1][0]["entries"][0][0];
    *entry = Value::from(entry.as_f64().unwrap() * 1.01);
    std::fs::write(&file, scheme.to_string()).unwrap();
    let (code, report) = call(&["validate", &file]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == Value::Bool(false))
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"completeness"), "{failed:?}");
}

#[test]
fn identity_check_passes() {
    let (code, out) = call(&["identity-check", "--variant", "sic", "-d", "2", "--trials", "100", "--seed", "7"]);
    assert_eq!(code, 0);
    assert!(out["max_deviation"].as_f64().unwrap() <= 1e-9);
    for v in ["mub", "mum", "gsic"] {
        assert_eq!(call(&["identity-check", "--variant", v, "-d", "5", "--trials", "20"]).0, 0);
    }
}

#[test]
fn info_reports_and_rejects_bad_state() {
    let dir = tempfile::tempdir().unwrap();
    let scheme = p(dir.path(), "m.json");
    let state = p(dir.path(), "s.json");
    let bad = p(dir.path(), "bad.json");
    call(&["gen", "mub", "-d", "2", "-o", &scheme]);
    call(&["rand", "state", "-d", "2", "--kind", "pure", "--seed", "4", "-o", &state]);
    let (code, out) = call(&["info", "--scheme", &scheme, "--state", &state]);
    assert_eq!(code, 0);
    assert!((out["bz_total_measured"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert!((out["coincidence_sum"].as_f64().unwrap() - 2.0).abs() < 1e-12);
    let (code, out) = call(&["info", "--scheme", &scheme, "--state", &state, "--eta", "0.5"]);
    assert_eq!(code, 0);
    assert!((out["bz_total_measured"].as_f64().unwrap() - 0.125).abs() < 1e-12);
    assert_eq!(out["per_povm"].as_array().unwrap().len(), 3);
    std::fs::write(&bad, r#"{"d": 2, "entries": [[1, 0], [0, 0]]}"#).unwrap();
    let (code, out) = call(&["info", "--scheme", &scheme, "--state", &bad]);
    assert_eq!(code, 3);
    assert_eq!(out["error"]["kind"], "parse");
    let (code, _) = call(&["info", "--scheme", &scheme, "--state", &p(dir.path(), "missing.json")]);
    assert_eq!(code, 3);
}

#[test]
fn channel_commands() {
    let dir = tempfile::tempdir().unwrap();
    let c = p(dir.path(), "c.json");
    let b = p(dir.path(), "b.json");
    let s = p(dir.path(), "s.json");
    call(&["rand", "channel", "-d", "3", "--kind", "contraction", "--target", "1", "-o", &c]);
    call(&["rand", "channel", "-d", "3", "--kind", "bistochastic", "--seed", "2", "-o", &b]);
    call(&["rand", "state", "-d", "3", "--kind", "mixed", "-o", &s]);
    let (code, out) = call(&["channel", "norms", "--channel", &c]);
    assert_eq!(code, 0);
    assert!((out["map_norm"].as_f64().unwrap() - 3.0).abs() < 1e-10);
    assert!((out["hs_norm"].as_f64().unwrap() - (2.0f64 / 3.0).sqrt()).abs() < 1e-10);
    let (code, out) = call(&["channel", "check", "--channel", &b]);
    assert_eq!(code, 0);
    assert_eq!(out["bistochastic"], Value::Bool(true));
    let (code, out) = call(&["channel", "norms", "--channel", &b, "--state", &s]);
    assert_eq!(code, 0);
    assert_eq!(out["monotonicity"]["holds"], Value::Bool(true));
    let (code, out) = call(&["channel", "apply", "--channel", &c, "--state", &s]);
    assert_eq!(code, 0);
    assert!((out["purity"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn probe_and_report_agree() {
    let dir = tempfile::tempdir().unwrap();
    let c = p(dir.path(), "c.json");
    let m = p(dir.path(), "m.json");
    let shots = p(dir.path(), "shots.json");
    call(&["rand", "channel", "-d", "3", "--kind", "contraction", "-o", &c]);
    call(&["gen", "mub", "-d", "3", "-o", &m]);
    let (code, inline) = call(&[
        "probe", "--channel", &c, "--scheme", &m, "--shots", "100000", "--seed", "3", "--save-shots", &shots,
    ]);
    assert_eq!(code, 0, "{inline}");
    let (code, replay) = call(&["probe", "report", "--shots", &shots]);
    assert_eq!(code, 0);
    assert_eq!(inline, replay);
    assert_eq!(call(&["probe", "--channel", &c]).0, 2);
}

#[test]
fn usage_errors_and_help() {
    let (code, out) = call(&["gen", "mub", "--bogus"]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "usage");
    assert_eq!(call(&["gen", "mub", "-d", "6"]).1["error"]["kind"], "unsupported");
    let help = run(["bzinfo", "--help"]);
    assert_eq!(help.code, 0);
    for word in ["gen", "validate", "info", "identity-check", "channel", "rand", "probe", "matrix", "scheme", "shots"] {
        assert!(help.stdout.contains(word), "help lacks {word}");
    }
    let version = run(["bzinfo", "--version"]);
    assert!(version.stdout.contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn binary_output_is_byte_identical_across_runs() {
    let bin = env!("CARGO_BIN_EXE_bzinfo");
    let args = ["identity-check", "--variant", "mum", "-d", "4", "--trials", "30", "--seed", "9"];
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin).args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
}

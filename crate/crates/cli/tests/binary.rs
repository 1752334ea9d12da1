use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl2casson")).args(args).env_remove("SL2CASSON_EPS").output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("sl2casson-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn seifert_report_shape() {
    let v = json(&run(&["seifert", "--m", "5", "--n", "7"]));
    assert_eq!(v["manifold"], "M(5,7)");
    let reps = v["per_rep"].as_array().unwrap();
    assert_eq!(reps.len(), 2);
    assert_eq!(v["lambda"], -2);
    assert!(reps.iter().all(|r| r["epsilon"] == -1));
    let total: i64 = v["graded"].as_array().unwrap().iter().map(|g| g["coeff"].as_i64().unwrap()).sum();
    assert_eq!(total, -2);
}

#[test]
fn output_is_deterministic() {
    let a = run(&["seifert", "--m", "3", "--n", "11", "--grading", "torsion"]);
    let b = run(&["seifert", "--m", "3", "--n", "11", "--grading", "torsion"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn invalid_spec_is_an_error() {
    let out = run(&["seifert", "--m", "3", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1/m + 1/n"));
    assert_eq!(run(&["brieskorn", "--m", "3", "--p", "4", "--q", "6"]).status.code(), Some(2));
}

#[test]
fn brieskorn_count_and_bad_rep() {
    let v = json(&run(&["brieskorn", "--m", "3", "--p", "4", "--q", "5"]));
    assert_eq!(v["count"], 2);

    let identity = r#"{"gens": [[[1,0],[0,1]], [[1,0],[0,1]], [[2,0],[0,0.5]]]}"#;
    let path = temp_file("bad_rep.json", identity);
    let out = run(&["brieskorn", "--m", "3", "--p", "4", "--q", "5", "--rep", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("violates relator r"), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn torsion_backends() {
    let exact = temp_file("exact.json", r#"{"dims": [1, 1], "maps": [[["2/3"]]]}"#);
    let v = json(&run(&["--backend", "exact", "torsion", "--complex", exact.to_str().unwrap()]));
    assert_eq!(v["torsion_exact"], "3/2");

    let float = temp_file("float.json", r#"{"dims": [1, 1], "maps": [[[4.0]]]}"#);
    let v = json(&run(&["torsion", "--complex", float.to_str().unwrap()]));
    assert_eq!(v["torsion"], 0.25);

    let out = run(&["--backend", "exact", "--eps", "1e-9", "torsion", "--complex", exact.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eps_from_environment() {
    let float = temp_file("env.json", r#"{"dims": [1, 1], "maps": [[[4.0]]]}"#);
    let out = Command::new(env!("CARGO_BIN_EXE_sl2casson"))
        .args(["torsion", "--complex", float.to_str().unwrap()])
        .env("SL2CASSON_EPS", "-1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let out = run(&["check", "--suite", "fox", "--seed", "3"]);
    assert_eq!(json(&out)["ok"], true);
    let out = run(&["check", "--suite", "cocycle", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["checks"][1]["passed"], 1000);
    assert_eq!(run(&["check", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn table_and_output_file() {
    let out = run(&["--format", "table", "brieskorn", "--m", "3", "--p", "5", "--q", "11"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("manifold: Sigma(3,5,11)"), "{text}");

    let dir = std::env::temp_dir().join(format!("sl2casson-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["--output", path.to_str().unwrap(), "seifert", "--m", "3", "--n", "7"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["manifold"], "M(3,7)");
}

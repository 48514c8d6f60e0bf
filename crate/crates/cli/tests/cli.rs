use std::process::{Command, Output};

fn weakorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weakorder"))
        .args(args)
        .env_remove("WEAKORDER_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn roots_counts() {
    let out = weakorder(&["roots", "--type", "A3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 7);
    let out = weakorder(&["roots", "--type", "I2(5)", "--format", "json"]);
    assert_eq!(json(&out)["count"], 5);
    let out = weakorder(&["roots", "--type", "F4", "--format", "json"]);
    let doc = json(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["roots"].as_array().unwrap().len(), 24);
}

#[test]
fn join_s4_example() {
    let out = weakorder(&[
        "join", "--type", "A3", "--u", "3124", "--v", "1423", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["join"], "4312 [2 1 3 2 1]");
    assert_eq!(doc["holds"], true);
    assert_eq!(doc["excluded"]["reflections"], serde_json::json!(["(1 2)"]));
}

#[test]
fn join_dihedral_example_and_non_reduced_warning() {
    let out = weakorder(&[
        "join", "--type", "I2(4)", "--u", "1", "--v", "1 2 1", "--format", "json",
    ]);
    let doc = json(&out);
    assert_eq!(doc["join_word"], "1 2 1");
    assert_eq!(doc["excluded"]["indices"], serde_json::json!([1]));

    let out = weakorder(&["join", "--type", "A3", "--u", "1 1 2", "--v", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not reduced"));

    let out = weakorder(&["join", "--type", "A3", "--u", "2 1", "--v", "2 1"]);
    assert!(stdout(&out).contains("u ∨ v          = 3124 [2 1]"));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = weakorder(&[
        "verify",
        "--type",
        "A2",
        "--conjecture",
        "EQ",
        "--workers",
        "2",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["pairs_checked"], 36);
    assert_eq!(report["conjecture"], "EQ");
    assert_eq!(report["workers"], 2);
    assert_eq!(report["seed"], serde_json::Value::Null);

    let out = weakorder(&[
        "verify", "--type", "H3", "--sample", "500", "--seed", "9", "--format", "json",
    ]);
    let doc = json(&out);
    assert_eq!(doc["pairs_checked"], 500);
    assert_eq!(doc["seed"], 9);
    assert_eq!(doc["mode"], "sample");
}

#[test]
fn workers_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_weakorder"))
        .args(["verify", "--type", "A2", "--format", "json"])
        .env("WEAKORDER_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(json(&out)["workers"], 3);
}

#[test]
fn dot_export() {
    let out = weakorder(&["dot", "--type", "A3", "--u", "3124", "--v", "1423"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("highlight=true").count(), 5);

    let out = weakorder(&["dot", "--type", "A3", "--u", "e", "--v", "e"]);
    let dot = stdout(&out);
    assert_eq!(dot.matches("[label=").count(), 1);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let out = weakorder(&[
        "dot",
        "--type",
        "A2",
        "--u",
        "1 2 1",
        "--v",
        "e",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(path).unwrap();
    assert_eq!(
        dot.matches("[label=").count() - dot.matches("->").count(),
        6
    );
}

#[test]
fn matrix_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b3.json");
    std::fs::write(
        &path,
        r#"{"rank": 3, "m": [[1, 4, 2], [4, 1, 3], [2, 3, 1]]}"#,
    )
    .unwrap();
    let out = weakorder(&[
        "roots",
        "--matrix",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["count"], 9);

    std::fs::write(&path, r#"{"rank": 2, "m": [[1, 3], [3, 1]], "extra": 1}"#).unwrap();
    let out = weakorder(&["roots", "--matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(weakorder(&["roots", "--type", "Q7"]).status.code(), Some(2));
    assert_eq!(weakorder(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        weakorder(&["join", "--type", "A3", "--u", "9", "--v", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        weakorder(&["verify", "--type", "A2", "--conjecture", "Z"])
            .status
            .code(),
        Some(2)
    );
    // too few roots allowed: construction error
    assert_eq!(
        weakorder(&["roots", "--type", "H3", "--cap", "5"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn float_backend() {
    let out = weakorder(&[
        "verify",
        "--type",
        "B3",
        "--backend",
        "float",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["backend"], "float");
}

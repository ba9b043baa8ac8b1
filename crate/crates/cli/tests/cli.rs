//! End-to-end tests against the built binary: rendered output, JSON schema,
//! exit codes, and byte-determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_demweight"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {:?}", out);
    String::from_utf8(out.stdout).expect("utf8")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn char_renders_term_lists() {
    assert_eq!(
        stdout(&["char", "--type", "A1", "--weight", "-1"]).trim(),
        "e^{1} + e^{-1}"
    );
    assert_eq!(
        stdout(&["char", "--type", "A1", "--weight", "1"]).trim(),
        "e^{1}"
    );
    assert_eq!(
        stdout(&["char", "--type", "A2", "--weight", "0,0"]).trim(),
        "1"
    );
}

#[test]
fn macdonald_stages() {
    assert_eq!(
        stdout(&[
            "macdonald",
            "--type",
            "A1",
            "--weight",
            "-1",
            "--stage",
            "t"
        ])
        .trim(),
        "(-t^{-1} + 1)*e^{1} + e^{-1}"
    );
    assert_eq!(
        stdout(&[
            "macdonald",
            "--type",
            "A1",
            "--weight",
            "0",
            "--stage",
            "qt"
        ])
        .trim(),
        "1"
    );
    // The t -> oo limit agrees with the character command.
    let via_limit = stdout(&[
        "macdonald",
        "--type",
        "A1",
        "--weight",
        "-1",
        "--stage",
        "char",
    ]);
    let direct = stdout(&["char", "--type", "A1", "--weight", "-1"]);
    assert_eq!(via_limit, direct);
}

#[test]
fn predict_rows() {
    let csv = stdout(&[
        "predict", "--type", "A1", "--lambda", "-1", "--all-mu", "--format", "csv",
    ]);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("type,lambda,mu,m,n,vol_poly,checks_passed")
    );
    assert_eq!(lines.next(), Some("A1,-1,1,1,1,-1 + t^{1},true"));
    assert_eq!(lines.next(), Some("A1,-1,-1,1,2,t^{2},true"));

    let text = stdout(&["predict", "--type", "A1", "--lambda", "1", "--mu", "1"]);
    assert_eq!(text.trim(), "lambda=1 mu=1 m=1 n=0 vol=1 checks=ok");
}

#[test]
fn json_round_trips() {
    let body = stdout(&[
        "predict", "--type", "A1", "--lambda", "-1", "--all-mu", "--format", "json",
    ]);
    let rows: serde_json::Value = serde_json::from_str(&body).expect("valid json");
    let rows = rows.as_array().expect("array of records");
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert_eq!(row["type"], "A1");
        assert_eq!(row["lambda"], "-1");
        assert!(row["m"].is_i64());
        assert!(row["n"].is_i64());
        assert!(row["checks"].is_object());
    }

    let body = stdout(&["char", "--type", "A1", "--weight", "-1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&body).expect("valid json");
    assert_eq!(v["kind"], "char");
    assert_eq!(v["terms"].as_array().map(|t| t.len()), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["char", "--type", "E8", "--weight", "1"]), 2);
    assert_eq!(exit_code(&["char", "--type", "A1", "--weight", "x"]), 2);
    assert_eq!(exit_code(&["char", "--type", "A1", "--weight", "1,2"]), 2);
    assert_eq!(
        exit_code(&["predict", "--type", "A1", "--lambda", "1", "--mu", "-1"]),
        3
    );
    assert_eq!(exit_code(&["verify", "--type", "A1", "--radius", "100"]), 1);
    assert_eq!(
        exit_code(&[
            "macdonald",
            "--type",
            "A1",
            "--weight",
            "-20",
            "--stage",
            "qt"
        ]),
        1
    );
    assert_eq!(exit_code(&["verify", "--type", "A1", "--radius", "4"]), 0);
}

#[test]
fn verify_reports_and_is_deterministic() {
    let args = ["verify", "--type", "A2", "--radius", "4"];
    let a = stdout(&args);
    assert!(a.contains("char_limit_identity"));
    assert!(a.trim_end().ends_with("PASS"));
    let b = stdout(&args);
    assert_eq!(a, b);

    let args = [
        "predict", "--type", "B2", "--lambda", "-1,0", "--all-mu", "--format", "json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}

use std::process::{Command, Output};

use serde_json::{json, Value};

fn smtilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smtilt"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn info() {
    let out = smtilt(&["-e", "3", "-w", "2", "info"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{\"indecomposables\":15,\"polygon_size\":10,\"rank\":3,\"weight\":2}\n"
    );
}

#[test]
fn left_tilt_at_three_five() {
    let out = smtilt(&[
        "-e",
        "3",
        "-w",
        "2",
        "tilt",
        "--left",
        "--system",
        "3-5,1-6,7-9",
        "--at",
        "3-5",
    ]);
    assert_eq!(stdout_json(&out)["system"], json!([[1, 6], [2, 4], [7, 9]]));
    let back = smtilt(&[
        "tilt",
        "--right",
        "--system",
        "1-6,2-4,7-9",
        "--at",
        "2-4",
        "-e",
        "3",
        "-w",
        "2",
    ]);
    assert_eq!(
        stdout_json(&back)["system"],
        json!([[1, 6], [3, 5], [7, 9]])
    );
}

#[test]
fn sms_check_reports_violation() {
    let v = stdout_json(&smtilt(&[
        "-e",
        "3",
        "-w",
        "2",
        "sms",
        "check",
        "--system",
        "3-5,3-8,7-9",
    ]));
    assert_eq!(v["is_sms"], false);
    let v = stdout_json(&smtilt(&[
        "-e",
        "3",
        "-w",
        "2",
        "sms",
        "check",
        "--system",
        "3-5,1-6,7-9",
    ]));
    assert_eq!(v["is_sms"], true);
    assert_eq!(
        v["gabriel_quiver"]["simples"],
        json!([[1, 6], [3, 5], [7, 9]])
    );
}

#[test]
fn exports() {
    let out = smtilt(&["-e", "2", "-w", "3", "tilt-graph", "--format", "dot"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 30);
    let out = smtilt(&[
        "-e",
        "3",
        "-w",
        "2",
        "closure",
        "--system",
        "3-5,1-6,7-9",
        "--format",
        "svg",
    ]);
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("class=\"chord simple\"").count(), 3);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(smtilt(&["info"]).status.code(), Some(2));
    assert_eq!(
        smtilt(&["-e", "3", "-w", "2", "frobnicate"]).status.code(),
        Some(2)
    );
    assert_eq!(
        smtilt(&["-e", "3", "-w", "2", "closure", "--system", "35"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn domain_errors_exit_1_with_json() {
    let out = smtilt(&[
        "-e",
        "3",
        "-w",
        "2",
        "tilt",
        "--left",
        "--system",
        "3-5,3-8,7-9",
        "--at",
        "3-5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["code"], "not_sms");
    let out = smtilt(&["-e", "9", "-w", "2", "verify"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_prints_check_lines() {
    let out = smtilt(&["-e", "2", "-w", "2", "verify", "--suite", "orthogonality"]);
    assert_eq!(stdout_json(&out)["passed"], true);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.lines().all(|l| l.starts_with("PASS orthogonality/")));
}

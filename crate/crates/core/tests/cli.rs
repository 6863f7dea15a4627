use std::process::{Command, Output};

fn sv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sv")).args(args).output().expect("run sv")
}

fn stdout(args: &[&str]) -> String {
    let out = sv(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn normal_form_command() {
    assert_eq!(stdout(&["normal-form", "L1*L-1"]).trim(), "L-1*L1 - 2*L0");
    assert_eq!(stdout(&["normal-form", "M0^2"]).trim(), "M0^2");
    assert_eq!(stdout(&["normal-form", "3/2*Y-1"]).trim(), "3/2*Y-1");
    assert_eq!(stdout(&["normal-form", "L1*L-1 − L-1*L1"]).trim(), "-2*L0");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["--format", "json", "normal-form", "L1*L-1"])).unwrap();
    assert_eq!(json[1]["word"], "L0");
    assert_eq!(json[1]["coeff"], "-2/1");
}

#[test]
fn bracket_command() {
    assert_eq!(stdout(&["bracket", "L1", "Y-1"]).trim(), "-Y0");
    assert_eq!(stdout(&["bracket", "Y0", "Y-1"]).trim(), "-M0");
    assert_eq!(stdout(&["bracket", "L1*L1", "L-1"]).trim(), "-4*L0*L1 + 2*L1");
}

#[test]
fn module_commands() {
    assert_eq!(stdout(&["act", "M1", "--m1", "1", "--on", "L-1*w"]).trim(), "L-1*w - M0*w");
    assert_eq!(stdout(&["act", "L0", "--module", "verma", "--xi", "1", "--zeta", "5/2"]).trim(), "5/2*w");
    assert_eq!(stdout(&["dot-act", "M1", "--m1", "1", "--on", "L-1*w"]).trim(), "-M0*w");
    let json = r#"[{"index":{"k":0,"mu":[],"nu":[],"lambda":[1]},"coeff":"1"}]"#;
    assert_eq!(stdout(&["dot-act", "M1", "--m1", "1", "--on", json]).trim(), "-M0*w");
    assert_eq!(stdout(&["nilpotency", "M1", "--m1", "1", "--on", "L-1*w"]).trim(), "2");
}

#[test]
fn vectors_from_files() {
    let dir = std::env::temp_dir().join(format!("sv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let on = dir.join("v.json");
    std::fs::write(&on, r#"[{"index":{"k":0,"mu":[],"nu":[],"lambda":[1]},"coeff":"2/4"}]"#).unwrap();
    assert_eq!(stdout(&["act", "M1", "--m1", "1", "--on", on.to_str().unwrap()]).trim(), "1/2*L-1*w - 1/2*M0*w");
    let gens = dir.join("gens.json");
    std::fs::write(&gens, r#"[[{"index":{"k":0,"mu":[],"nu":[],"lambda":[2]},"coeff":"1"}]]"#).unwrap();
    let out = stdout(&[
        "closure",
        "--gens",
        gens.to_str().unwrap(),
        "--module",
        "quotient",
        "--deg",
        "3",
        "--l0",
        "1",
        "--m0",
        "0",
    ]);
    assert!(out.starts_with("dimension "));
    assert!(!out.lines().any(|l| l.trim() == "w"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn solver_commands() {
    let out = stdout(&["whittaker-vectors", "--m1", "1", "--deg", "2", "--l0", "2", "--m0", "2"]);
    assert_eq!(out.lines().next(), Some("dimension 3"));
    let out = stdout(&[
        "singular-vectors",
        "--module",
        "verma",
        "--xi",
        "1",
        "--deg",
        "3",
        "--l0",
        "0",
        "--m0",
        "0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["truncation"]["D"], "3");
    let out = stdout(&["singular-vectors", "--module", "verma", "--deg", "3/2", "--l0", "0", "--m0", "0"]);
    assert!(out.starts_with("dimension "));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["normal-form", "L1*"],
        vec!["normal-form", ""],
        vec!["normal-form", "Q3"],
        vec!["act", "L1", "--eta1", "1/0"],
        vec!["dot-act", "L-1"],
        vec!["act", "L1", "--module", "verma", "--m1", "1"],
        vec![
            "act",
            "L1",
            "--module",
            "quotient",
            "--xi",
            "1",
            "--on",
            r#"[{"index":{"k":1,"mu":[],"nu":[],"lambda":[]},"coeff":"1"}]"#,
        ],
        vec!["whittaker-vectors", "--deg", "-1"],
        vec!["no-such-command"],
    ] {
        assert_eq!(sv(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn check_failures_exit_1() {
    let out = sv(&["nilpotency", "L1", "--m1", "1", "--on", "L-1^2*w", "--bound", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sv(&["verify", "--deg", "1", "--l0", "1", "--m0", "1", "--corrupt-relations"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("[FAIL] lie-axioms"));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--deg", "1", "--l0", "1", "--m0", "1", "--seed", "7"];
    let a = sv(&args);
    let b = sv(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let json = stdout(&["--format", "json", "verify", "--deg", "1", "--l0", "1", "--m0", "1"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 13);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

//! End-to-end checks of the command line contract: exit codes, output
//! formats and the report fields scripts depend on.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sphmul"))
}

#[test]
fn clean_scan_exits_zero() {
    let out = bin()
        .args(["check-pair", "--case", "Sym.A4", "--param", "n=5", "--bound", "4"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{:?}", out);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result: PASS"), "{}", text);
}

#[test]
fn unknown_case_exits_two() {
    let out = bin()
        .args(["check-pair", "--case", "Sym.A99"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown case"), "{}", err);
}

#[test]
fn bad_parameter_exits_two() {
    let out = bin()
        .args(["check-pair", "--case", "Sym.A1", "--param", "n=1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_report_shape() {
    let out = bin()
        .args([
            "check-pair",
            "--case",
            "Sym.A1",
            "--param",
            "n=2",
            "--bound",
            "2",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["kind"], "ConjectureScan");
    assert_eq!(v["config"]["case"], "Sym.A1");
    assert_eq!(v["counts"]["disagreements"], 0);
    assert!(v["counts"]["triples"].as_u64().unwrap() > 0);
}

#[test]
fn csv_has_one_row_per_verdict() {
    let out = bin()
        .args([
            "check-pair",
            "--case",
            "Sym.A1",
            "--param",
            "n=2",
            "--bound",
            "2",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "case,params,lam,mu,nu,lhs,rhs_tensor,rhs_order,agree"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 14); // the triple count at this bound
    assert!(rows.iter().all(|r| r.starts_with("Sym.A1,n=2,")));
}

#[test]
fn isogeny_single_case() {
    let out = bin()
        .args(["verify-isogeny", "--case", "Sph.A6", "--param", "n=3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("index 2"), "{}", text);
}

#[test]
fn jack_prints_expansion_and_constants() {
    let out = bin().args(["jack", "--lambda", "2", "--mu", "1"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("J_(2) = (2) m_(1,1) + (k + 1) m_(2)"), "{}", text);
    assert!(text.contains("g^(2,1)"), "{}", text);
}

#[test]
fn output_file_written() {
    let dir = std::env::temp_dir().join("sphmul-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = bin()
        .args([
            "check-stanley",
            "--max-degree",
            "2",
            "--format",
            "json",
            "--output",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["kind"], "StanleyScan");
    std::fs::remove_file(&path).ok();
}

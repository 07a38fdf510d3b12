use std::process::{Command, Output};

use normlds::report::{BasisReport, FamilyDto, SequenceDto};

fn normlds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normlds")).args(args).output().unwrap()
}

const FIELD: &str = "x^4-10x^2+1";

#[test]
fn emit_sequence_first_column() {
    let out = normlds(&["emit-sequence", "--field", FIELD, "--unit", "t", "--beta", "1", "--basis", "thm1", "--kmax", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let dto: SequenceDto = serde_json::from_slice(&out.stdout).unwrap();
    let x1: Vec<&str> = dto.terms.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(x1[..8], ["0", "1", "1", "11", "10", "109", "99", "1079"]);
    assert_eq!(dto.recurrence, ["0", "10", "0", "-1"]);
    assert!(dto.recurrence_ok);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["family-scan", "--m-range", "2..7", "--kmax", "60"];
    let a = normlds(&args);
    let b = normlds(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let dto: FamilyDto = serde_json::from_slice(&a.stdout).unwrap();
    let ms: Vec<&str> = dto.entries.iter().map(|e| e.m.as_str()).collect();
    assert_eq!(ms, ["2", "3", "4", "5", "6", "7"]);
    assert!(dto.entries.iter().filter(|e| e.status == "built").all(|e| e.lds.as_ref().unwrap().holds));
}

#[test]
fn basis_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    let p = path.to_str().unwrap();
    let out = normlds(&["construct-basis", "--field", FIELD, "--unit", "t", "--beta", "1+t", "--basis", "thm1", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let saved: BasisReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(saved.source.as_deref(), Some("quartic-power-module"));

    let direct = normlds(&["emit-sequence", "--field", FIELD, "--unit", "t", "--beta", "1+t", "--basis", "thm1", "--kmax", "15"]);
    let via_file = normlds(&["emit-sequence", "--basis-file", p, "--kmax", "15"]);
    assert_eq!(via_file.status.code(), Some(0));
    assert_eq!(direct.stdout, via_file.stdout);
}

#[test]
fn csv_columns() {
    let out = normlds(&["emit-sequence", "--field", FIELD, "--unit", "t", "--kmax", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("k,x1,x2,x3,x4"));
    assert_eq!(text.lines().count(), 5);
    let out = normlds(&["dk-scan", "--field", "x^2-2", "--alpha", "3+2t", "--kmax", "3", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "k,dk\n0,0\n1,2\n2,4\n3,14\n");
}

#[test]
fn exit_codes() {
    // parse errors
    assert_eq!(normlds(&["emit-sequence", "--field", "x^4-10x^^2+1", "--unit", "t"]).status.code(), Some(3));
    assert_eq!(normlds(&["family-scan", "--m-range", "two..ten"]).status.code(), Some(3));
    assert_eq!(normlds(&["no-such-command"]).status.code(), Some(3));
    // preconditions
    assert_eq!(normlds(&["construct-basis", "--field", "x^4-2", "--unit", "t"]).status.code(), Some(2));
    assert_eq!(normlds(&["construct-basis", "--field", "x^4-10x^2+1", "--unit", "t", "--beta", "0"]).status.code(), Some(2));
    // x1 of the power basis is not a divisibility sequence
    assert_eq!(
        normlds(&["verify-lds", "--field", FIELD, "--unit", "t", "--basis", "power", "--nmax", "20"]).status.code(),
        Some(2)
    );
    assert_eq!(normlds(&["verify-lds", "--field", FIELD, "--unit", "t", "--nmax", "50"]).status.code(), Some(0));
}

#[test]
fn criterion_failure_carries_diagnostics() {
    // Z[η] + Z·(η + η³)/2: δ = (1, 1, 1, 2) and χ4 = 0
    let basis = "1,t,t^2,1/2*t+1/2*t^3";
    let out = normlds(&["construct-basis", "--field", FIELD, "--unit", "t", "--module-basis", basis, "--basis", "full"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["satisfied"], false);
    assert_eq!(v["deltas"], serde_json::json!(["1", "1", "1", "2"]));
    assert_eq!(v["chi"][3], "0");
    let snf = normlds(&["snf-check", "--field", FIELD, "--unit", "t", "--module-basis", basis]);
    assert_eq!(snf.status.code(), Some(2));
    assert_eq!(snf.stdout, out.stdout);

    let ok = normlds(&["construct-basis", "--field", FIELD, "--unit", "t", "--module-basis", "1/2+1/2*t^2,t,t^2,t^3", "--basis", "full"]);
    assert_eq!(ok.status.code(), Some(0));
    let r: BasisReport = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(r.expected_initial, ["0", "2", "2", "22"]);
}

#[test]
fn empty_range() {
    let out = normlds(&["family-scan", "--m-range", "10..2"]);
    assert_eq!(out.status.code(), Some(0));
    let dto: FamilyDto = serde_json::from_slice(&out.stdout).unwrap();
    assert!(dto.entries.is_empty());
}

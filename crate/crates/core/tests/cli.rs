use std::process::Command;

use trdeg::cli::run;
use trdeg::SubmonicCertificate;

fn trdeg(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("trdeg").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn dep_json_certificate() {
    let (code, out, _) =
        trdeg(&["dep", "--coeffs", "ZZ", "--ring", "ZZ", "--elems", "12,18", "--order", "lex:x1>x2", "--maxdeg", "3", "--json"]);
    assert_eq!(code, 0);
    let cert = SubmonicCertificate::from_json(&out).unwrap();
    assert_eq!(cert.poly_string(), "x2^2 - 27*x1");
    assert!(cert.check().is_ok());
}

#[test]
fn dep_without_relation_exits_one() {
    let (code, out, _) = trdeg(&["dep", "--ring", "ZZ", "--elems", "2", "--maxdeg", "6"]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "no submonic relation of degree <= 6");
}

#[test]
fn dim_of_quotient() {
    let (code, out, _) = trdeg(&["dim", "--ring", "Quot(Poly(QQ; x,y); [x*y])"]);
    assert_eq!((code, out.trim()), (0, "1"));
}

#[test]
fn verify_detects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let (_, json, _) = trdeg(&["dep", "--ring", "ZZ", "--elems", "12,18", "--order", "lex:x1>x2", "--maxdeg", "3", "--json"]);
    let good = dir.path().join("good.json");
    std::fs::write(&good, &json).unwrap();
    let (code, out, _) = trdeg(&["verify", "--cert", good.to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, "ok: certificate verified"));

    let mut v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let coeff = &mut v["poly"][1][0];
    assert_eq!(coeff, "-27");
    *coeff = "-26".into();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let (code, out, err) = trdeg(&["verify", "--cert", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("invalid: "), "{out}");
    assert!(err.contains("verification failed"));
}

#[test]
fn cl_with_conversion() {
    let (code, out, _) = trdeg(&["cl", "--ring", "Zmod(12)", "--elems", "2", "--maxexp", "4", "--submonic"]);
    assert_eq!(code, 0);
    assert_eq!(out, "exponents: 2\ncoefficients: 2\nsubmonic: 10*x1^3 + x1^2 = 0\n");
    let (code, _, _) = trdeg(&["cl", "--ring", "ZZ", "--elems", "2", "--maxexp", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn member_and_weights() {
    let (code, out, _) = trdeg(&["member", "--ring", "Poly(QQ; t1,t2)", "--poly", "t1^2*t2", "--gens", "t1^2*t2^2, t1^3*t2"]);
    assert_eq!((code, out.trim()), (0, "false"));
    let (code, out, _) = trdeg(&["member", "--ring", "Poly(QQ; x,y)", "--poly", "x^2*y - y", "--gens", "x^2 - 1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["member"], true);
    assert_eq!(v["cofactors"], serde_json::json!(["y"]));

    let (code, out, _) = trdeg(&["weights", "--trailing", "x2^3", "--above", "x1, x1*x2", "--order", "lex"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "4,1");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(trdeg(&["dep", "--ring", "ZZ", "--elems", "1/2"]).0, 2);
    assert_eq!(trdeg(&["dim", "--ring", "Poly(ZZ; x"]).0, 2);
    assert_eq!(trdeg(&["frobnicate"]).0, 2);
    assert_eq!(trdeg(&["dep", "--coeffs", "Poly(ZZ; x)", "--ring", "Poly(ZZ; x)", "--elems", "x"]).0, 2);
}

#[test]
fn depmatrix_counts() {
    let (code, out, _) = trdeg(&["depmatrix", "--ring", "ZZ", "--pool", "2,3,4", "--arity", "2", "--maxdeg", "3", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    assert_eq!(v["dependent"], 3);
}

#[test]
fn experiment_files_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2).map(|i| dir.path().join(format!("run{i}.json"))).collect();
    let csv = dir.path().join("run.csv");
    for p in &paths {
        let args = ["experiment", "--trials", "12", "--maxdeg", "4", "--out", p.to_str().unwrap(), "--csv", csv.to_str().unwrap()];
        assert_eq!(trdeg(&args).0, 0);
    }
    let first = std::fs::read_to_string(&paths[0]).unwrap();
    assert_eq!(first, std::fs::read_to_string(&paths[1]).unwrap());
    let (code, out, _) = trdeg(&["verify", "--cert", paths[0].to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, "ok: report with 12 trials verified"));
    let csv = std::fs::read_to_string(csv).unwrap();
    assert_eq!(csv.lines().next(), Some("trial,arity,verdict,cert_degree,millis"));
    assert_eq!(csv.lines().count(), 13);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_trdeg");
    let ok = Command::new(bin).args(["dim", "--ring", "ZZ"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "1");
    let bad = Command::new(bin).args(["dim", "--ring", "ZZ["]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}

use std::path::{Path, PathBuf};
use std::process::Command;

use matfield::Matrix;
use matfield_cli::specfile::parse_matrix_literal;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_matfield")).args(args).output().expect("binary runs");
    (String::from_utf8(out.stdout).expect("utf-8 output"), out.status.code().expect("exit code"))
}

fn run_on(cmd: &str, spec: &str, extra: &[&str]) -> (String, i32) {
    let path = fixture(spec);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

/// Every `[[...]]` literal appearing in the text.
fn matrix_literals(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut rest = text;
    while let Some(start) = rest.find("[[") {
        let tail = &rest[start..];
        let end = tail.find("]]").expect("closed literal") + 2;
        out.push(&tail[..end]);
        rest = &tail[end..];
    }
    out
}

#[test]
fn classify_field_and_zero_divisor_verdicts() {
    let (out, code) = run_on("classify", "ic.json", &[]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: FIELD (primitive element [[0,-1],[1,0]], min poly t^2+1)"), "{out}");

    for spec in ["ia.json", "ib.json"] {
        let (out, code) = run_on("classify", spec, &[]);
        assert_eq!(code, 0);
        assert!(out.contains("verdict: COMMUTATIVE RING WITH ZERO DIVISORS, witness"), "{out}");
    }

    let (out, _) = run_on("classify", "ic.json", &["--field", "QI"]);
    assert!(out.contains("witness [[-1i,-1],[1,-1i]]·[[1i,-1],[1,1i]]=0"), "{out}");
}

#[test]
fn classify_json_has_sorted_keys_and_is_deterministic() {
    let (a, code) = run_on("classify", "quaternion.json", &["--format", "json"]);
    assert_eq!(code, 0);
    let (b, _) = run_on("classify", "quaternion.json", &["--format", "json"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["label"], "RING WITH ZERO DIVISORS");
    assert_eq!(v["commutative"], false);
}

#[test]
fn printed_matrices_round_trip() {
    let mut seen = 0;
    for spec in ["ic.json", "ia.json", "quaternion.json", "pauli.json", "dirac.json"] {
        for cmd in ["classify", "closure"] {
            let (out, _) = run_on(cmd, spec, &[]);
            for lit in matrix_literals(&out) {
                let m: Matrix = parse_matrix_literal(lit).unwrap_or_else(|e| panic!("{lit}: {e}"));
                assert_eq!(m.to_string(), lit);
                seen += 1;
            }
        }
    }
    assert!(seen > 40, "only {seen} literals");
}

#[test]
fn closure_dimensions() {
    let cases = [("ic.json", 2), ("quaternion.json", 4), ("pauli.json", 4), ("dirac.json", 16), ("cb_comm.json", 3), ("c_anticomm.json", 2)];
    for (spec, dim) in cases {
        let (out, code) = run_on("closure", spec, &[]);
        assert_eq!(code, 0, "{spec}: {out}");
        assert!(out.contains(&format!("closure: dim {dim}\n")), "{spec}: {out}");
    }
}

#[test]
fn closure_cap_exit_code() {
    let (out, code) = run_on("closure", "dirac.json", &["--max-dim", "2"]);
    assert_eq!(code, 3, "{out}");
    let (_, code) = run_on("classify", "dirac.json", &[]);
    assert_eq!(code, 0);
}

#[test]
fn commutator_table() {
    let (out, code) = run_on("closure", "cb_comm.json", &[]);
    assert_eq!(code, 0);
    assert!(out.contains("comm |"), "{out}");
}

#[test]
fn witness_commands() {
    let (out, code) = run_on("witness", "ia.json", &["--kind", "zero-divisor"]);
    assert_eq!(code, 0);
    let lits = matrix_literals(&out);
    assert_eq!(lits.len(), 2, "{out}");
    let (x, y) = (parse_matrix_literal(lits[0]).unwrap(), parse_matrix_literal(lits[1]).unwrap());
    assert!((&x * &y).is_zero());

    let (out, code) = run_on("witness", "quaternion.json", &["--kind", "noncommuting"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("NONCOMMUTING"), "{out}");

    let (out, code) = run_on("witness", "ic.json", &["--kind", "zero-divisor"]);
    assert_eq!(code, 0);
    assert!(out.contains("none found within budget 500"), "{out}");
}

#[test]
fn table_formats() {
    let (out, code) = run_on("table", "quaternion.json", &[]);
    assert_eq!(code, 0);
    assert!(out.contains("\nmul | g1 g2  g3 g4\n") && out.contains("\ng2  | g2 -g1 g4 -g3\n"), "{out}");
    let (csv, code) = run_on("table", "quaternion.json", &["--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv.lines().count(), 5, "{csv}");

    let (out, code) = run_on("table", "c_anticomm.json", &[]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("not closed: NOT_IN_SPAN"), "{out}");
}

#[test]
fn malformed_inputs_exit_with_input_error() {
    let cases = [
        ("bad_scalar.json", Some("7:")),
        ("unknown_key.json", Some("5:")),
        ("bad_field.json", Some("4:")),
        ("bad_bracket.json", Some("5:")),
        ("truncated.json", Some("7:")),
        ("zero_denominator.json", Some("6:")),
        ("ragged.json", None),
    ];
    for (name, position) in cases {
        let (out, code) = run_on("classify", &format!("malformed/{name}"), &[]);
        assert_eq!(code, 2, "{name}: {out}");
        assert!(out.starts_with("error: "), "{name}: {out}");
        if let Some(p) = position {
            assert!(out.contains(&format!("{name}:{p}")), "{name}: {out}");
        }
    }
    let (_, code) = run(&["classify", "/nonexistent/spec.json"]);
    assert_eq!(code, 2);
}

#[test]
fn check_paper_matches_golden_text_and_json() {
    let (text, code) = run(&["check-paper", "--golden", golden("check_paper.txt").to_str().unwrap()]);
    assert_eq!(code, 0, "{text}");
    let (json, code) = run(&["check-paper", "--format", "json", "--golden", golden("check_paper.json").to_str().unwrap()]);
    assert_eq!(code, 0, "{json}");
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["summary"]["mismatches"], 0);
}

#[test]
fn check_paper_golden_mismatch_shows_diff() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.txt");
    let edited = std::fs::read_to_string(golden("check_paper.txt")).unwrap().replacen("HOLDS ", "HOLDZ ", 1);
    std::fs::write(&path, edited).unwrap();
    let (out, code) = run(&["check-paper", "--golden", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("golden mismatch:"), "{out}");
    assert!(out.contains("-CL-01") && out.contains("+CL-01"), "{out}");
}

#[test]
fn check_paper_filters() {
    let (out, code) = run(&["check-paper", "--claims", "CL-08", "--modes", "Q"]);
    assert_eq!(code, 0);
    assert!(out.contains("CL-08") && !out.contains("QI_AS_C") && !out.contains("CL-01 "), "{out}");
    let (out, code) = run(&["check-paper", "--claims", "CL-99"]);
    assert_eq!(code, 2, "{out}");
}

use std::io::Write as _;

use deligne_ring::cli::{run, run_with_sign_rule};
use deligne_ring::deligne::{coset_sign, CosetPattern};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("deligne").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn sclass_examples() {
    let (code, out, _) = call(&["sclass", "--lambda", "1", "--mu", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[{\"lambda\":[1],\"mu\":[1],\"coeff\":\"1\"},{\"lambda\":[],\"mu\":[],\"coeff\":\"-1\"}]\n");

    let (code, out, _) = call(&["sclass", "--lambda", "", "--mu", ""]);
    assert_eq!(code, 0);
    assert_eq!(out, "[{\"lambda\":[],\"mu\":[],\"coeff\":\"1\"}]\n");

    let (code, out, _) = call(&["sclass", "--lambda", "[]", "--mu", "[]", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1\n");
}

#[test]
fn sclass_hdet_basis() {
    let (code, out, _) = call(&["sclass", "--lambda", "1", "--mu", "1", "--basis", "hdet"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"basis\":\"h\",\"terms\":[{\"lambda\":[1],\"mu\":[1],\"coeff\":\"1\"},{\"lambda\":[],\"mu\":[],\"coeff\":\"-1\"}]}\n"
    );
}

#[test]
fn output_is_byte_stable() {
    let args = ["tensor", "--a", "2,1;1", "--b", "1;1,1"];
    let first = call(&args);
    assert_eq!(first.0, 0);
    for _ in 0..3 {
        assert_eq!(call(&args), first);
    }
}

#[test]
fn tensor_of_adjoint_with_itself() {
    let (code, out, _) = call(&["tensor", "--a", "1;1", "--b", "[1],[1]", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out, "S[2;2] + S[2;1,1] + S[1,1;2] + S[1,1;1,1] + 2*S[1;1] + S[;]\n");
}

#[test]
fn expand_reads_json_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"[{{"lambda":[1],"mu":[1],"coeff":"1"}}]"#).unwrap();
    let path = file.path().to_str().unwrap();
    let (code, out, _) = call(&["expand", "--input", path]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"basis\":\"S\",\"terms\":[{\"lambda\":[1],\"mu\":[1],\"coeff\":\"1\"},{\"lambda\":[],\"mu\":[],\"coeff\":\"1\"}]}\n"
    );
}

#[test]
fn expand_rejects_bad_input() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"[{{"lambda":[1,2],"mu":[],"coeff":"1"}}]"#).unwrap();
    let (code, _, err) = call(&["expand", "--input", file.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("error"));
    assert_eq!(call(&["expand", "--input", "/definitely/not/here.json"]).0, 2);
}

#[test]
fn specialize_text() {
    let (code, out, _) = call(&["specialize", "--lambda", "1", "--mu", "1", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "x1^-1*x2^1 + x1^0*x2^0 + x1^1*x2^-1\n");
}

#[test]
fn verify_detsum_passes() {
    let (code, out, _) = call(&["verify", "--suite", "detsum", "--max-size", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS (144 cases)"), "{out}");
}

#[test]
fn verify_other_suites_pass() {
    for args in [
        &["verify", "--suite", "omega", "--max-size", "3"][..],
        &["verify", "--suite", "detshift", "--max-size", "4"],
        &["verify", "--suite", "f_n", "--max-size", "2"],
        &["verify", "--suite", "cauchy", "--max-size", "2", "--degree", "4"],
        &["verify", "--suite", "genfun", "--degree", "3"],
    ] {
        let (code, out, _) = call(args);
        assert_eq!(code, 0, "{args:?}: {out}");
        assert!(out.contains("PASS"));
    }
}

#[test]
fn genfun_report_lists_truncation() {
    let (_, out, _) = call(&["verify", "--suite", "genfun", "--degree", "2"]);
    assert!(out.contains("truncation: a=2 b=2 nx=3 ny=3 degree=2"));
    assert!(out.contains("pairs summed:"));
}

fn mutated_sign(p: &CosetPattern) -> i8 {
    // Flip the sign of exactly one pattern shape.
    if p.to_string() == "×∘∘×" {
        -coset_sign(p)
    } else {
        coset_sign(p)
    }
}

#[test]
fn verify_detsum_fails_under_sign_mutation() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = ["deligne", "verify", "--suite", "detsum", "--max-size", "4"];
    let code = run_with_sign_rule(argv, &mut out, &mut err, mutated_sign);
    assert_eq!(code, 1);
    let out = String::from_utf8(out).unwrap();
    assert!(out.contains("FAIL"), "{out}");
}

#[test]
fn usage_errors() {
    assert_eq!(call(&[]).0, 2);
    assert_eq!(call(&["sclass", "--lambda", "1"]).0, 2);
    assert_eq!(call(&["sclass", "--lambda", "a", "--mu", "1"]).0, 2);
    assert_eq!(call(&["sclass", "--lambda", "0,1", "--mu", "1"]).0, 2);
    assert_eq!(call(&["tensor", "--a", "1,1", "--b", "1;1"]).0, 2);
    assert_eq!(call(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(call(&["verify", "--suite", "genfun", "--degree", "9"]).0, 2);
    assert_eq!(call(&["bench", "--op", "lr"]).0, 2);
    assert_eq!(call(&["sclass", "--lambda", "1", "--mu", "1", "--format", "yaml"]).0, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("sclass"));
}

#[test]
fn bench_reports_counts() {
    let (code, out, _) = call(&["bench", "--op", "lr", "--size", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("items: 16"), "{out}");
    let (code, out, _) = call(&["bench", "--op", "sclass", "--size", "1", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("{\"op\":\"sclass\",\"size\":1,\"items\":4,"), "{out}");
}

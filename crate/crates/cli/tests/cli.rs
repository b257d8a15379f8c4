use std::process::{Command, Output};

use proptest::prelude::*;
use riordan_cli::expr::parse_expr;
use riordan_cli::format::{parse_cf_spec, TriangleDoc};
use riordan_core::rational::{frac, int};
use riordan_core::{Fps, RiordanPair, Triangle};
use serde_json::Value;

fn riordan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_riordan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn identity_array() {
    let out = riordan(&["riordan", "--g", "1", "--f", "x", "--order", "6"]);
    assert!(out.status.success());
    let doc: TriangleDoc = serde_json::from_value(json(&out)).unwrap();
    assert!(doc.to_rational().unwrap().is_identity());
}

#[test]
fn emitted_triangle_reads_back() {
    let out = riordan(&["riordan", "--g", "1/(1-x)", "--f", "x/(1-x)", "--order", "8", "--inverse"]);
    let doc: TriangleDoc = serde_json::from_value(json(&out)).unwrap();
    let pascal = RiordanPair::pascal(8).matrix(8).unwrap();
    assert_eq!(doc.to_rational().unwrap(), pascal.inverse().unwrap());
}

#[test]
fn identify_schroeder() {
    let out = riordan(&["identify", "--terms", "1,2,6,22,90"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["matches"][0]["name"], "A006318");
}

#[test]
fn verify_one_suite() {
    let out = riordan(&["verify", "--suite", "s3"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["passed"], true);
    assert_eq!(report["suites"].as_array().unwrap().len(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(riordan(&["riordan", "--g", "(1", "--f", "x"]).status.code(), Some(2));
    assert_eq!(riordan(&["riordan", "--g", "0", "--f", "x"]).status.code(), Some(3));
    assert_eq!(riordan(&["apply", "--g", "1", "--f", "1+x", "--h", "x"]).status.code(), Some(3));
    assert_eq!(riordan(&["verify", "--suite", "s9"]).status.code(), Some(2));
    assert_eq!(riordan(&["frobnicate"]).status.code(), Some(2));
    let out = riordan(&["riordan", "--g", "1", "--f", "x", "--order", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("64"));
}

#[test]
fn apply_and_revert() {
    let out = riordan(&["apply", "--g", "1/(1-x)", "--f", "x/(1-x)", "--h", "1/(1-x)", "--order", "6"]);
    let terms: Vec<String> = serde_json::from_value(json(&out)["terms"].clone()).unwrap();
    assert_eq!(terms, ["1", "2", "4", "8", "16", "32"]);
    let out = riordan(&["revert", "--f", "x/(1-x)", "--order", "5"]);
    let terms: Vec<String> = serde_json::from_value(json(&out)["terms"].clone()).unwrap();
    assert_eq!(terms, ["0", "1", "-1", "1", "-1"]);
}

#[test]
fn expand_and_oracle_agree() {
    let spec = r#"{"kind":"thron","a":{"prefix":["y"],"tail":"1"},"b":{"prefix":["1"],"tail":"1"}}"#;
    let expanded = riordan(&["expand", "--cf", spec, "--order", "5", "--y-sub", "1"]);
    let oracle = riordan(&["oracle", "--kind", "schroeder", "--n", "4"]);
    assert!(oracle.status.success() && expanded.status.success());
    let schroeder = serde_json::json!(["1", "2", "6", "22", "90"]);
    assert_eq!(json(&expanded)["terms"], schroeder);
    assert_eq!(json(&oracle)["counts"], schroeder);
}

fn mutate(text: &str, ops: &[(usize, u8, u8)]) -> String {
    const ALPHABET: &[u8] = b"0123456789xy+-*/^()., sqrtexp{}[]\":";
    let mut bytes = text.as_bytes().to_vec();
    for &(pos, op, ch) in ops {
        let c = ALPHABET[ch as usize % ALPHABET.len()];
        let i = if bytes.is_empty() { 0 } else { pos % (bytes.len() + 1) };
        match op % 3 {
            0 => bytes.insert(i, c),
            1 if i < bytes.len() => {
                bytes.remove(i);
            }
            _ if i < bytes.len() => bytes[i] = c,
            _ => bytes.push(c),
        }
    }
    String::from_utf8(bytes).expect("ASCII stays valid")
}

const SEEDS: &[&str] = &[
    "(1-sqrt(1-4x))/(2x)",
    "exp(2(exp(3x)-1)/9+4x/3)",
    "1/(1-y x)^2",
    "-x^3 + 2/3x - (y+1)",
];

const SPEC: &str = r#"{"kind":"jacobi","a":{"prefix":["y+2"],"tail":{"cycle":[1,2]}},"b":{"prefix":[3],"tail":{"poly":[1,1]}}}"#;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mutated_expressions_fail_cleanly(
        seed in 0..SEEDS.len(),
        ops in prop::collection::vec((any::<usize>(), any::<u8>(), any::<u8>()), 1..6),
    ) {
        let text = mutate(SEEDS[seed], &ops);
        if let Ok(e) = parse_expr(&text) {
            let _ = e.eval(6);
        } else {
            let err = parse_expr(&text).unwrap_err();
            prop_assert!(err.offset <= text.len());
        }
    }

    #[test]
    fn mutated_specs_fail_cleanly(ops in prop::collection::vec((any::<usize>(), any::<u8>(), any::<u8>()), 1..6)) {
        let text = mutate(SPEC, &ops);
        if let Ok(cf) = parse_cf_spec(&text) {
            let _ = cf.expand(5);
        }
    }

    #[test]
    fn triangles_round_trip(rows in prop::collection::vec(prop::collection::vec((-50i64..50, 1i64..7), 6), 6)) {
        let t = Triangle::from_fn(6, |n, k| frac(rows[n][k].0, rows[n][k].1));
        let text = serde_json::to_string(&TriangleDoc::rational(Some("t"), &t)).unwrap();
        let doc: TriangleDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(doc.to_rational().unwrap(), t);
    }

    #[test]
    fn parsed_polynomials_match(cs in prop::collection::vec(-9i64..10, 1..6)) {
        let text: Vec<String> = cs.iter().enumerate().map(|(k, c)| format!("({c})x^{k}")).collect();
        let s = parse_expr(&text.join("+")).unwrap().eval_rational(8).unwrap();
        prop_assert_eq!(s, Fps::polynomial(cs.iter().map(|&c| int(c)).collect(), 8));
    }
}

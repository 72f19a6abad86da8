use std::process::{Command, Output};

use kpeterson_cli::{run_suite, Status, SuiteOptions, SUITES};
use serde_json::Value;

fn kp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpeterson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = kp(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn strip_timing(mut v: Value) -> Value {
    for c in v["cases"].as_array_mut().unwrap() {
        c.as_object_mut().unwrap().remove("elapsed_ms");
    }
    v
}

#[test]
fn gdual_of_column() {
    // g_{11} = h1^2 - h2 + h1
    let v = json(&["gdual", "1,1"]);
    let expected: Value = serde_json::from_str(
        r#"[{"coeff":"-1","monomial":[2]},{"coeff":"1","monomial":[1,1]},{"coeff":"1","monomial":[1]}]"#,
    )
    .unwrap();
    assert_eq!(v, expected);
}

#[test]
fn phi_of_x1_for_n2() {
    // z1 -> h1/(1+h1), so x1 = 1 - z1 -> 1/(1+h1)
    let v = json(&["phi", "--n", "2", "--poly", "x1"]);
    assert_eq!(v["num"], serde_json::json!([{"coeff": "1", "monomial": []}]));
    assert_eq!(
        v["den"],
        serde_json::json!([{"coeff": "1", "monomial": [1]}, {"coeff": "1", "monomial": []}])
    );
}

#[test]
fn small_values() {
    assert_eq!(json(&["lambda-map", "1432", "--n", "4"]), "2,1,1");
    assert_eq!(json(&["kconj", "2,1", "--k", "3"]), "2,1");
    assert_eq!(json(&["klr", "1", "1", "1,1"]), 1);
    let g = kp(&["groth", "231", "--text"]);
    assert_eq!(String::from_utf8_lossy(&g.stdout).trim(), "x1*x2");
    let t = json(&["tau", "--n", "3"]);
    assert_eq!(t["tau"].as_array().unwrap().len(), 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(kp(&["verify", "no-such-suite"]).status.code(), Some(2));
    let bad = kp(&["phi", "--n", "3", "--poly", "x1 + (z2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("position"));
    assert_eq!(kp(&["gdual", "1,2"]).status.code(), Some(2));
    assert_eq!(kp(&["groth", "1432", "--n", "3"]).status.code(), Some(2));
    assert_eq!(kp(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn example_suite_and_out_file() {
    let dir = std::env::temp_dir().join(format!("kpeterson-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let out = kp(&["verify", "example-1-2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 4);
    assert!(cases.iter().all(|c| c["status"] == "pass"));
    assert_eq!(v["suite"], "example-1-2");
}

#[test]
fn invariant_suite_n3_has_three_cases() {
    let v = json(&["verify", "remarkable-identity", "--n", "3"]);
    assert_eq!(v["cases"].as_array().unwrap().len(), 3);
}

#[test]
fn toda_suite_hundred_trials() {
    let v = json(&["verify", "toda-roundtrip", "--n", "4", "--trials", "100", "--seed", "7"]);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 100);
    assert!(cases.iter().all(|c| c["status"] == "pass"));
    let r = json(&["toda-roundtrip", "--n", "3", "--trials", "10", "--seed", "2"]);
    assert_eq!(r["failures"].as_array().unwrap().len(), 0);
    assert_eq!(r["trials"], 10);
}

#[test]
fn reports_are_deterministic() {
    let a = json(&["verify", "d-recursions", "--n", "3", "--seed", "5", "--jobs", "1"]);
    let b = json(&["verify", "d-recursions", "--n", "3", "--seed", "5", "--jobs", "4"]);
    assert_eq!(strip_timing(a), strip_timing(b));
}

#[test]
fn fiber_table_n4() {
    let v = json(&["verify", "conjecture2", "--n", "4"]);
    let rows = v["table"].as_array().unwrap();
    assert_eq!(rows.len(), 24);
    for key in ["w", "lambda", "lambda_conj", "gtilde", "divisibility"] {
        assert!(rows[0].get(key).is_some(), "{key}");
    }
    assert!(v["cases"].as_array().unwrap().iter().all(|c| c["status"] == "reported"));
}

#[test]
fn every_suite_runs_clean() {
    for name in SUITES {
        let opts = SuiteOptions {
            n: match name {
                "theorem-1-5" | "prop-6-chain" | "conjecture7-4" | "remarkable-identity" => Some(4),
                "prop-5-1" => Some(5),
                "toda-roundtrip" => Some(3),
                "conjecture2" => Some(4),
                _ => None,
            },
            trials: 20,
            ..SuiteOptions::default()
        };
        let r = run_suite(name, &opts).unwrap();
        assert!(!r.cases.is_empty(), "{name}");
        assert_eq!(r.failed(), 0, "{name}: {}", r.to_text());
        let ids: std::collections::HashSet<_> = r.cases.iter().map(|c| &c.id).collect();
        assert_eq!(ids.len(), r.cases.len(), "{name}: duplicate ids");
        if name != "conjecture2" {
            assert!(r.cases.iter().any(|c| c.status == Status::Pass), "{name}");
        }
    }
}

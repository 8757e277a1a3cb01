//! End-to-end behavior of the command-line front end.

use std::process::Command;

use galois_kit_cli::run_command;
use proptest::prelude::*;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["galois-kit", "--json"];
    argv.extend_from_slice(args);
    let out = run_command(argv);
    let v: Value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    assert_eq!(v["exit_code"], out.exit_code);
    (out.exit_code, v)
}

const NESTED: &str = r#"{"stages":[{"k":2,"radicand":"2"},{"k":2,"radicand":"1 + r1"}]}"#;

#[test]
fn group_of_cube_root_of_two() {
    let (code, v) = run(&["group", "x^3-2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["group"]["order"], 6);
    assert_eq!(v["result"]["degree"], 6);
    assert_eq!(v["result"]["group"]["derived_series_orders"], serde_json::json!([6, 3, 1]));
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "#G = [E:Q]" && c["passed"] == true));
}

#[test]
fn bring_jerrard_quintic_is_not_solvable() {
    let (code, v) = run(&["solvable", "x^5-x-1"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["verdict"], "NOT_SOLVABLE_BY_RADICALS");
    assert_eq!(r["quintic"]["lower_bound"], "S5");
    assert_eq!(r["quintic"]["observations"][0]["factors"], serde_json::json!(["x^2 + x + 1", "x^3 + x^2 + 1"]));
    assert_eq!(r["derived_series_orders"], serde_json::json!([120, 60, 60]));
}

#[test]
fn normalize_reads_a_chain_file() {
    let dir = std::env::temp_dir().join(format!("galois-kit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chain.json");
    std::fs::write(&path, NESTED).unwrap();
    let (code, v) = run(&["normalize", "--chain", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["degrees"], serde_json::json!([1, 1, 2, 8]));
    assert_eq!(v["result"]["n"], 2);
    assert_eq!(v["result"]["layers"][1]["rational_polynomial"], "x^4 - 2*x^2 - 1");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let (code, v) = run(&["factor", "x^2 - y"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["column"], 7);
    assert_eq!(v["error"]["message"], "parse error at column 7: unknown symbol y");

    let (code, v) = run(&["group", "x^4+x+1", "--degree-cap", "10"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "degree_cap");

    let (code, _) = run(&["normalize", "--chain-json", r#"{"stages":[{"k":1,"radicand":"2"}]}"#]);
    assert_eq!(code, 2);
    let (code, v) = run(&["normalize", "--chain-json", "{\"stages\": ["]);
    assert_eq!((code, v["error"]["kind"].as_str()), (2, Some("parse")));
    let (code, _) = run(&["normalize", "--chain", "/nonexistent/chain.json"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["solvable", "x^5-x-1", "--primes", "2,4"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["fixed", "x^3-2", "--subgroup", "9"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["solvable", "3"]);
    assert_eq!(code, 2);

    let out = run_command(["galois-kit", "no-such-command"]);
    assert_eq!(out.exit_code, 2);
    assert!(out.report.is_none());
    assert_eq!(run_command(["galois-kit", "--help"]).exit_code, 0);
}

#[test]
fn witness_primes_come_from_the_flag() {
    let (code, v) = run(&["solvable", "x^5-x-1", "--primes", "2,3"]);
    assert_eq!(code, 0);
    assert_eq!(v["settings"]["primes"], serde_json::json!([2, 3]));
    assert_eq!(v["result"]["quintic"]["candidates"], serde_json::json!(["S5"]));
    // two 5-cycles leave every candidate alive; the fallback splitting field
    // has degree 120 and the default cap refuses it instead of guessing
    let (code, v) = run(&["solvable", "x^5-x-1", "--primes", "3,5"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "degree_cap");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let cases: &[&[&str]] = &[
        &["group", "x^4-2"],
        &["fixed", "x^4-2", "--subgroup", "1,2"],
        &["minpoly", "x^4+1", "--element", "x0 + 2*x1"],
        &["chain-groups", "--chain-json", NESTED],
        &["solvable", "x^5-2"],
    ];
    for args in cases {
        let mut argv = vec!["galois-kit", "--json"];
        argv.extend_from_slice(args);
        let a = run_command(argv.clone()).stdout;
        let b = run_command(argv).stdout;
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn human_output_lists_checks() {
    let out = run_command(["galois-kit", "minpoly", "x^3-2", "--element", "x0 + x1"]);
    assert_eq!(out.exit_code, 0);
    assert!(out.stdout.contains("orbit product:  x^3 + 2"));
    assert!(out.stdout.contains("linear algebra: x^3 + 2"));
    assert!(out.stdout.contains("[pass] orbit polynomial equals the minimal polynomial of x0 + x1"));
    let out = run_command(["galois-kit", "factor", "x^2 - y"]);
    assert!(out.stderr.starts_with("error: parse error at column 7"));
    let out = run_command(["galois-kit", "factor", "x^2-1", "--timing"]);
    assert!(out.stderr.starts_with("elapsed: "));
}

#[test]
fn binary_exit_status_and_streams() {
    let bin = env!("CARGO_BIN_EXE_galois-kit");
    let ok = Command::new(bin).args(["--json", "group", "x^2-2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["result"]["group"]["order"], 2);
    let bad = Command::new(bin).args(["split", "x^^2"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error: parse error"));
    let capped = Command::new(bin).args(["split", "x^3-2", "--degree-cap", "3"]).output().unwrap();
    assert_eq!(capped.status.code(), Some(3));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn factor_reports_verified_products(a in -4i64..=4, b in -4i64..=4, c in -4i64..=4) {
        let text = format!("(x^2 + ({a})*x + ({b}))*(x + ({c}))*(x^3 - 2)");
        let (code, v) = run(&["factor", &text]);
        prop_assert_eq!(code, 0);
        let degree: u64 = v["result"]["factors"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| f["degree"].as_u64().unwrap() * f["multiplicity"].as_u64().unwrap())
            .sum();
        prop_assert_eq!(degree, 6);
        prop_assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    }
}

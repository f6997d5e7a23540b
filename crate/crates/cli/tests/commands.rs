//! The binary's output and exit codes.

use std::process::Command;

use serde_json::Value;

fn coadqh(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_coadqh")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn gw_query() {
    let (code, out, _) = coadqh(&["gw", "E6", "--classes", "pt,t,t,t", "--degree", "1"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out), serde_json::json!({ "value": "1" }));
    let (code, out, _) = coadqh(&["gw", "E8", "--classes", "pt,t,t,t"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["value"], "2");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(coadqh(&["gw", "E6", "--classes", "pt,t,t"]).0, 2);
    assert_eq!(coadqh(&["roots", "D"]).0, 2);
    assert_eq!(coadqh(&["roots", "Q7"]).0, 2);
    assert_eq!(coadqh(&["frobnicate"]).0, 2);
    let (code, _, err) = coadqh(&["product", "E6", "--classes", "h,t", "--q", "x/y"]);
    assert_eq!(code, 2);
    assert_eq!(json(&err)["error"]["kind"], "usage");
}

#[test]
fn verify_small_type_d() {
    let (code, out, _) = coadqh(&["verify", "D", "--n", "5", "--small"]);
    assert_eq!(code, 0);
    let reports = json(&out);
    let checks = reports[0]["checks"].as_array().unwrap();
    let find = |name: &str| checks.iter().find(|c| c["name"] == name).unwrap()["computed"].clone();
    assert_eq!(find("type D fat point length"), "5");
    assert_eq!(find("type D reduced points"), "35");
    assert_eq!(reports[0]["seed"], 11);
}

#[test]
fn verify_big_e6() {
    let (code, out, _) = coadqh(&["verify", "E6", "--big"]);
    assert_eq!(code, 0);
    let checks = json(&out)[0]["checks"].as_array().unwrap().clone();
    let generic: Vec<String> = checks.iter().filter(|c| c["name"].as_str().unwrap().ends_with("generic route")).map(|c| c["computed"].as_str().unwrap().to_string()).collect();
    assert_eq!(generic, vec!["2", "-2"]);
    let rank = checks.iter().find(|c| c["name"] == "Jacobian rank at the origin").unwrap();
    assert_eq!(rank["computed"], "3");
}

#[test]
fn verification_mismatch_exits_with_one() {
    let (code, out, _) = coadqh(&["verify", "B3", "--big"]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)[0]["checks"][0]["passed"], false);
}

#[test]
fn report_filter_and_json() {
    let (code, out, _) = coadqh(&["report", "--filter", "folding", "--json"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 1);
    assert_eq!(v["criteria"][0]["id"], 8);
    let (code, out, _) = coadqh(&["report", "--filter", "basis"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("[PASS] 1."));
    assert_eq!(coadqh(&["report", "--filter", "nothing"]).0, 2);
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let dir = std::env::temp_dir().join(format!("coadqh-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("coset.json");
    let (code, out, _) = coadqh(&["coset", "F4", "--max-len", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let first = std::fs::read_to_string(&path).unwrap();
    assert_eq!(json(&first)["count"], 6);
    coadqh(&["coset", "F4", "--max-len", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
    std::fs::remove_dir_all(&dir).unwrap();
}

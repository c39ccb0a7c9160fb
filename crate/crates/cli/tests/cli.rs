use std::io::Write;
use std::process::{Command, Output, Stdio};

use nchess_core::ncparse::parse;
use serde_json::Value;

fn nchess(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nchess")).args(args).output().expect("nchess runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = nchess(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn classify_quartic() {
    let v = json(&["classify", "-g", "1", "x1^4"]);
    let r = &v["result"];
    assert_eq!(r["verdict"], "SigmaOne");
    assert_eq!(r["signature"], serde_json::json!([2, 1]));
    assert_eq!(r["data"]["f0"], "x1^2");
    assert_eq!(r["data"]["A"], serde_json::json!([["2"]]));
}

#[test]
fn palindrome_signature() {
    let v = json(&["signature", "-g", "2", "x1*x2*x1"]);
    assert_eq!(v["result"]["minus"], 1);
    assert_eq!(v["result"]["plus"], 1);
}

#[test]
fn identities_all_pass() {
    let out = nchess(&["identities", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 failed"));
}

#[test]
fn json_polynomials_reparse() {
    let v = json(&["hessian", "-g", "2", "x1^2 x2 + x2 x1^2"]);
    let h = v["result"]["hessian"].as_str().unwrap();
    let opts = nchess_core::ncparse::ParseOptions { allow_h: true };
    let back = nchess_core::ncparse::parse_with(h, 2, opts).unwrap();
    assert_eq!(nchess_core::ncparse::print(&back), h);
    let v = json(&["synthesize", "-g", "1", "--u", "1", "--f0", "x1^2"]);
    assert_eq!(parse(v["result"]["poly"].as_str().unwrap(), 1).unwrap(), parse("x1^4", 1).unwrap());
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nchess"))
        .args(["parse", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"x2 x1 x2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "x2*x1*x2");
}

#[test]
fn exit_codes() {
    assert_eq!(nchess(&["parse", "x1 +"]).status.code(), Some(1));
    assert_eq!(nchess(&["classify", "-g", "2", "x1 x2"]).status.code(), Some(1));
    assert_eq!(nchess(&["parse"]).status.code(), Some(2));
    assert_eq!(nchess(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn seeded_commands_are_deterministic() {
    let a = json(&["positivity", "x1^4", "--n", "7", "--seed", "4"]);
    let b = json(&["positivity", "x1^4", "--n", "7", "--seed", "4"]);
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["result"]["trials"][0]["verdict"], "Negative");
    let c = json(&["chsy", "-g", "2", "--r", "1", "--seed", "3"]);
    assert_eq!(c["result"]["codim"], 6);
}

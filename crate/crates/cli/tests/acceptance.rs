//! One PASS/FAIL line per acceptance criterion. Criteria 1–11 are read from
//! the `check-all` JSON report; criterion 12 is the command itself.

use std::process::Command;
use std::time::Instant;

#[test]
fn acceptance_scoreboard() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_nchess"))
        .args(["check-all", "--seed", "0", "--json"])
        .output()
        .expect("nchess runs");
    let secs = start.elapsed().as_secs_f64();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("JSON report");
    let criteria = report["result"]["criteria"].as_array().expect("criteria array");
    let mut all = true;
    for c in criteria {
        let passed = c["passed"].as_bool().unwrap_or(false);
        all &= passed;
        println!(
            "{} criterion {:>2} {}: {}",
            if passed { "PASS" } else { "FAIL" },
            c["number"],
            c["title"].as_str().unwrap_or(""),
            c["detail"].as_str().unwrap_or("")
        );
    }
    let numbers: Vec<u64> = criteria.iter().filter_map(|c| c["number"].as_u64()).collect();
    let cli_ok = out.status.code() == Some(0) && secs < 300.0 && numbers == (1..=11).collect::<Vec<_>>();
    println!(
        "{} criterion 12 CLI check-all --seed 0: exit {:?} in {secs:.1}s",
        if cli_ok { "PASS" } else { "FAIL" },
        out.status.code()
    );
    assert!(all && cli_ok);
}

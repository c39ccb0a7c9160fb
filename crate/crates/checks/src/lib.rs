//! Acceptance criteria 1–11, each compared against an independent oracle
//! from [`oracles`].

use std::time::Instant;

use serde::Serialize;

pub mod criteria;
pub mod oracles;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub number: u8,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] criterion {:>2} {}: {} ({:.2}s)", self.number, self.title, self.detail, self.seconds)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0 }
    }
}

pub const TITLES: [&str; 11] = [
    "derivative fidelity",
    "middle-matrix contract",
    "signature exactness",
    "degree bound",
    "classification round trip",
    "modified middle matrix inertia",
    "identity suite",
    "inertia transport to matrix points",
    "codimension equality",
    "relaxed Hessian dichotomy",
    "gradient coefficient relations",
];

pub fn run(number: u8, cfg: &Config) -> Option<CriterionResult> {
    let title = TITLES.get(usize::from(number).checked_sub(1)?)?;
    let start = Instant::now();
    let outcome = criteria::dispatch(number, cfg);
    let seconds = start.elapsed().as_secs_f64();
    let (passed, detail) = match outcome {
        Ok(t) => (t.passed(), t.summary()),
        Err(e) => (false, format!("error: {e}")),
    };
    Some(CriterionResult { number, title: (*title).to_string(), passed, detail, seconds })
}

pub fn run_all(cfg: &Config) -> Vec<CriterionResult> {
    (1..=11).filter_map(|n| run(n, cfg)).collect()
}

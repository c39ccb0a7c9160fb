use nchess_checks::{run, Config};

#[test]
fn every_criterion_passes_with_seed_zero() {
    let cfg = Config::default();
    let mut failed = Vec::new();
    for n in 1..=11 {
        let r = run(n, &cfg).unwrap();
        println!("{r}");
        if !r.passed {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn other_seeds_pass_the_fast_criteria() {
    for seed in [1, 2] {
        let cfg = Config { seed };
        for n in [3, 5, 6, 8, 9, 10, 11] {
            let r = run(n, &cfg).unwrap();
            assert!(r.passed, "{r}");
        }
    }
}

#[test]
fn unknown_criterion_is_none() {
    assert!(run(0, &Config::default()).is_none());
    assert!(run(12, &Config::default()).is_none());
}

//! The committed corpus must reproduce its expected certificates exactly.

use std::path::Path;

use sigmasum::corpus;
use sigmasum::expr::Config;

#[test]
fn committed_corpus_matches() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let reports = corpus::run_dir(&dir, &Config::default()).unwrap();
    assert!(reports.len() >= 20);
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| (r.name.clone(), r.differing_keys())).collect();
    assert!(failed.is_empty(), "mismatched cases: {failed:?}");
}

#[test]
fn parallel_and_sequential_runs_agree() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let cases = corpus::load_dir(&dir).unwrap();
    let cfg = Config { order: 24, ..Config::default() };
    let a: Vec<_> = corpus::run_cases(&cases, &cfg).into_iter().map(|r| r.actual).collect();
    let b: Vec<_> = corpus::run_cases_sequential(&cases, &cfg).into_iter().map(|r| r.actual).collect();
    assert_eq!(a, b);
}

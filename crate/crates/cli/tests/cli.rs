use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_sigmasum"));
    for var in ["SIGMASUM_ORDER", "SIGMASUM_FIELD", "SIGMASUM_DT", "SIGMASUM_DS", "SIGMASUM_JSON"] {
        c.env_remove(var);
    }
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

#[test]
fn sum_grandi() {
    let o = run(&["sum", "rat(1-s; 1-s^2)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1/2\nstatus: Summed\n");
    let v = json(&run(&["--json", "sum", "rat(1-s; 1-s^2)"]));
    assert_eq!(v["value"], "1/2");
    assert_eq!(v["annihilator"], "(1+s)*T - 1");
    assert_eq!(v["stripped_power"], 1);
}

#[test]
fn classify_infinite() {
    let o = run(&["--json", "classify", "inv(alg(T^2-(1-s); 1))"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["class"], "infinite");
    assert_eq!(v["status"], "Infinite");
    assert!(v["value"].is_null());
}

#[test]
fn scalarpoly_text() {
    let o = run(&["scalarpoly", "alg(T^2-(4-s); 2)"]);
    assert_eq!(stdout(&o), "t^2 - 3\n");
}

#[test]
fn guess_from_stream() {
    let f = data("grandi.coeffs");
    let o = run(&["--json", "--dT", "2", "--ds", "2", "guess", f.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["annihilator"], "(1+s)*T - 1");
    assert_eq!(v["value"], "1/2");
    assert_eq!(v["order"], 64);
}

#[test]
fn telescope_from_stream() {
    let o = run(&["telescope", data("pow2.coeffs").to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(1) / (1-2*s)\nvalue: -1\n");
}

#[test]
fn environment_mirrors_flags() {
    let o = bin().env("SIGMASUM_FIELD", "fp:7").env("SIGMASUM_JSON", "true").args(["sum", "grandi"]).output().unwrap();
    let v = json(&o);
    assert_eq!(v["field"], "fp:7");
    assert_eq!(v["value"], "4");
    let o = bin().env("SIGMASUM_ORDER", "10").args(["--json", "classify", "grandi"]).output().unwrap();
    assert_eq!(json(&o)["order"], 10);
}

#[test]
fn errors_exit_nonzero() {
    let o = run(&["--json", "sum", "rat(1;"]);
    assert!(!o.status.success());
    let v = json(&o);
    assert_eq!(v["error"], "SyntaxError");
    assert!(v["message"].as_str().unwrap().contains("column 7"));
    let o = run(&["sum", "rat(1; s)"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("denominator"));
    let o = run(&["--field", "fp:8", "sum", "grandi"]);
    assert!(!o.status.success());
}

#[test]
fn corpus_pass_and_fail() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.expr"), "grandi\n").unwrap();
    let d = dir.path().to_str().unwrap();
    assert!(!run(&["corpus", d]).status.success());
    assert!(run(&["corpus", "--bless", d]).status.success());
    let o = run(&["corpus", d]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1 passed, 0 failed"));
    std::fs::write(dir.path().join("g.expr"), "geom(2)\n").unwrap();
    let o = run(&["--json", "corpus", d]);
    assert!(!o.status.success());
    assert_eq!(json(&o)["failed"][0], "g");
}

#[test]
fn committed_corpus_passes() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let o = run(&["corpus", dir.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
}

//! One test per acceptance criterion. Each writes a `PASS`/`FAIL` line to
//! stderr directly, so the line shows up even when output is captured.

use std::io::Write as _;
use std::process::Command;

use leibniz::verify::{self, CheckResult};

fn report(criterion: &str, r: &CheckResult) {
    let mut err = std::io::stderr().lock();
    let _ = writeln!(
        err,
        "{} criterion {criterion}: {}",
        if r.passed { "PASS" } else { "FAIL" },
        r.title
    );
    for d in r.details.iter().filter(|d| d.starts_with("FAIL")) {
        let _ = writeln!(err, "    {d}");
    }
}

fn run(criterion: &str, r: CheckResult) {
    report(criterion, &r);
    assert!(r.passed, "criterion {criterion} failed: {:#?}", r.details);
}

#[test]
fn criterion_1_three_dimensional_counterexample() {
    run("1", verify::sec4_one_counterexample());
}

#[test]
fn criterion_2_four_dimensional_counterexample() {
    run("2", verify::sec4_two_counterexample());
}

#[test]
fn criterion_3_solvable_completeness() {
    run("3", verify::solvable_completeness());
}

#[test]
fn criterion_4_solvable_factorization() {
    run("4", verify::solvable_factorization());
}

#[test]
fn criterion_5_sl2() {
    run("5", verify::sl2_complete_lie());
}

#[test]
fn criterion_6_property_suite() {
    run("6", verify::property_suite());
}

#[test]
fn criterion_7_converse() {
    run("7", verify::converse_suite());
}

#[test]
fn criterion_8a_round_trip() {
    run("8a", verify::round_trip());
}

#[test]
fn criterion_8b_verify_paper_exits_zero() {
    let out = Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .arg("verify-paper")
        .output()
        .expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout);
    let failing: Vec<String> = text
        .lines()
        .filter(|l| l.starts_with("FAIL"))
        .map(str::to_string)
        .collect();
    let r = CheckResult {
        id: "8b".into(),
        title: "verify-paper exits with status 0".into(),
        passed: out.status.code() == Some(0),
        details: failing,
    };
    run("8b", r);
}

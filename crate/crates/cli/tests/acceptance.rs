//! Acceptance battery: each criterion runs at full scale, prints its verdict
//! line, and then asserts both the verdict and the runtime budget.
//!
//! Criteria 1-8 call the same harness code the `validate` subcommand uses;
//! criterion 9 exercises the built binary end to end.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use noma_bler::analytic::QuadratureConfig;
use noma_bler_cli::harness::{HarnessOptions, CRITERIA};

fn opts() -> HarnessOptions {
    HarnessOptions {
        seed: 20240823,
        trials: 1_000_000,
        quad: QuadratureConfig::new(30, 18).expect("battery quadrature"),
        corrupt_omega: false,
    }
}

fn run_criterion(index: usize, budget: Duration) {
    let (idx, name, f) = CRITERIA[index - 1];
    assert_eq!(idx, index, "battery table out of order");
    let started = Instant::now();
    let (pass, measured) = match f(&opts()) {
        Ok(outcome) => outcome,
        Err(e) => (false, format!("error: {e}")),
    };
    let elapsed = started.elapsed();
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("criterion {index} {name}: {verdict} ({measured})");
    eprintln!("[timing] criterion {index}: {elapsed:.2?}");
    assert!(
        elapsed <= budget,
        "criterion {index} took {elapsed:?}, budget {budget:?}"
    );
    assert!(pass, "criterion {index} {name}: {measured}");
}

#[test]
fn criterion_1_far_window_equivalence() {
    run_criterion(1, Duration::from_secs(30));
}

#[test]
fn criterion_2_near_window_equivalence() {
    run_criterion(2, Duration::from_secs(5));
}

#[test]
fn criterion_3_closed_form_vs_simulation() {
    run_criterion(3, Duration::from_secs(120));
}

#[test]
fn criterion_4_antiderivative_slopes() {
    run_criterion(4, Duration::from_secs(1));
}

#[test]
fn criterion_5_near_sinr_distribution() {
    run_criterion(5, Duration::from_secs(10));
}

#[test]
fn criterion_6_design_round_trip() {
    run_criterion(6, Duration::from_secs(30));
}

#[test]
fn criterion_7_orthogonal_baseline_gap() {
    run_criterion(7, Duration::from_secs(30));
}

#[test]
fn criterion_8_ordering_and_monotonicity() {
    run_criterion(8, Duration::from_secs(60));
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("noma-bler-acceptance-{}-{name}", std::process::id()))
}

fn run_validate(out: &Path) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_noma-bler"))
        .args(["validate", "--trials", "20000", "--quad-n", "12", "--seed", "4242", "--out"])
        .arg(out)
        .output()
        .expect("validate run")
}

#[test]
fn criterion_9_repeated_reports_byte_identical() {
    let (path_a, path_b) = (scratch("9a.txt"), scratch("9b.txt"));
    let run_a = run_validate(&path_a);
    let run_b = run_validate(&path_b);
    let bytes_a = std::fs::read(&path_a).expect("first report");
    let bytes_b = std::fs::read(&path_b).expect("second report");
    std::fs::remove_file(&path_a).ok();
    std::fs::remove_file(&path_b).ok();
    let identical = bytes_a == bytes_b && run_a.status.code() == run_b.status.code();
    let verdict = if identical { "PASS" } else { "FAIL" };
    println!(
        "criterion 9 determinism: {verdict} (two same-seed reports: {} vs {} bytes, exits {:?}/{:?})",
        bytes_a.len(),
        bytes_b.len(),
        run_a.status.code(),
        run_b.status.code()
    );
    assert!(identical, "same-seed validate runs must be byte-identical");

    // Fault injection: a corrupted inversion weight must fail the far-window
    // equivalence row and flip the overall exit status to 1.
    let corrupted = Command::new(env!("CARGO_BIN_EXE_noma-bler"))
        .args(["validate", "--trials", "2000", "--quad-n", "12", "--corrupt-omega"])
        .output()
        .expect("corrupted validate run");
    assert_eq!(corrupted.status.code(), Some(1), "corrupted run must exit 1");
    let text = String::from_utf8_lossy(&corrupted.stdout);
    assert!(
        text.contains("criterion 1 far-window equivalence: FAIL"),
        "corruption must surface in the far-window row:\n{text}"
    );
}

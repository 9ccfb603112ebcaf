//! Acceptance gate: runs every verification criterion at its pinned
//! tolerance and prints one status line per criterion. Gating criteria
//! must pass; diagnostics are reported only.
//!
//! The run uses the default seed and all available cores; it reproduces
//! `sortnet verify` exactly.

use sortnet_cli::verify::{format_report_lines, run, VerifyConfig};

#[test]
fn acceptance_criteria() {
    let cfg = VerifyConfig::default();
    let report = run(&cfg);
    for line in format_report_lines(&report) {
        println!("{}", line);
    }
    assert_eq!(report.criteria.len(), 18, "every criterion must run");
    let failing: Vec<String> = report
        .criteria
        .iter()
        .filter(|c| c.gating && !c.passed)
        .map(|c| format!("criterion {} ({}): {}", c.id, c.name, c.measured))
        .collect();
    assert!(
        report.all_gating_passed,
        "gating criteria failed:\n{}",
        failing.join("\n")
    );
}

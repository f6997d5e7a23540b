//! Acceptance criteria 1-9, one PASS/FAIL line each.

use std::process::ExitCode;

use coadqh_cli::suite::{run_all, DEFAULT_SEED};

fn main() -> ExitCode {
    let filter = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let report = run_all(filter.as_deref(), DEFAULT_SEED);
    for c in &report.criteria {
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {} ({} checks, {} ms)", c.id, c.title, c.checks.len(), c.elapsed_ms);
        for ch in c.checks.iter().filter(|ch| !ch.passed) {
            println!("    {} | computed {} | expected {}", ch.name, ch.computed, ch.expected);
        }
    }
    let failed = report.criteria.iter().filter(|c| !c.passed).count();
    println!("{} of {} criteria passed (seed {})", report.criteria.len() - failed, report.criteria.len(), report.seed);
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Runs every cross-check suite at a small bound and prints a summary.

use motcalc::verify::{run_suite, Suite, DEFAULT_SEED};
use motcalc::OrbitCap;

fn main() -> Result<(), motcalc::Error> {
    for suite in Suite::ALL {
        let bound = match suite {
            Suite::Kunneth | Suite::Tower => 25,
            _ => 5,
        };
        let report = run_suite(suite, bound, DEFAULT_SEED, OrbitCap::DEFAULT)?;
        let summary = report.summary();
        println!(
            "{:<12} bound {:<3} {} ({} of {} cases)",
            suite.name(),
            bound,
            summary.status,
            summary.passed,
            summary.cases
        );
        for failure in report.failures() {
            println!("    {} {}", failure.id, failure.detail);
        }
    }
    Ok(())
}

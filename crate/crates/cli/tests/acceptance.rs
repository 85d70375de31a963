//! One PASS/FAIL line per acceptance criterion. Skips count as failures
//! here: every criterion must run in full at the default budget.

use std::process::ExitCode;
use std::time::Instant;

use rcm::commands::DEFAULT_BUDGET;
use rcm::verify::{criterion, Status, CRITERIA};

fn main() -> ExitCode {
    let mut all_pass = true;
    for (k, title) in CRITERIA.iter().enumerate() {
        let started = Instant::now();
        let checks = criterion(k + 1, DEFAULT_BUDGET);
        let mut problems = Vec::new();
        for c in &checks {
            match &c.status {
                Status::Pass if c.skipped == 0 => {}
                Status::Pass => problems.push(format!("{}: {} cases skipped", c.name, c.skipped)),
                Status::Fail(why) | Status::Skipped(why) => problems.push(format!("{}: {why}", c.name)),
            }
        }
        let cases: u64 = checks.iter().map(|c| c.cases).sum();
        let secs = started.elapsed().as_secs_f64();
        if problems.is_empty() && !checks.is_empty() {
            println!("PASS criterion {}: {title} ({cases} cases, {secs:.1}s)", k + 1);
        } else {
            all_pass = false;
            println!("FAIL criterion {}: {title}: {}", k + 1, problems.join("; "));
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

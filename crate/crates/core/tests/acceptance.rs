//! Runs the twelve acceptance criteria and prints one line per criterion.
//! Exits nonzero when any criterion fails.

use std::process::ExitCode;

use posetkit::sweep::{run_desk_sweep, SweepConfig};

fn main() -> ExitCode {
    let results = run_desk_sweep(&SweepConfig::default());
    for r in &results {
        println!(
            "criterion {:>2} [{}] {}: {} ({:.2?})",
            r.id,
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail,
            r.elapsed
        );
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", results.len(), results.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}

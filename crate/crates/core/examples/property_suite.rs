//! A short run of the randomized property suite, reported per family.

use backflow::runner::run_property_suite;

fn main() -> backflow::Result<()> {
    let trials = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(500);
    let report = run_property_suite(2024, trials)?;
    for (family, stats) in report.families() {
        println!("{family:<45} {:>7}/{:<7} worst slack {:+.3e}", stats.passed, stats.checks, stats.worst_slack);
    }
    println!("{} checks, {} violations", report.checks(), report.violations());
    Ok(())
}

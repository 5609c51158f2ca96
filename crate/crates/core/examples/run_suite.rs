//! Runs a named suite in-process and prints its failures, if any.

use pplab::cli::{run_named, SuiteConfig};

fn main() -> pplab::error::Result<()> {
    let suite = std::env::args().nth(1).unwrap_or_else(|| "bsigma".into());
    let report = run_named(&SuiteConfig::new(&suite, 42))?;
    println!("{}: {} instances, pass {}", report.suite, report.instances.len(), report.passed());
    for (i, v) in report.failures() {
        println!("  {}: {}", i.key, v.claim);
    }
    Ok(())
}

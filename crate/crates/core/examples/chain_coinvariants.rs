//! The acyclic complex A = (ℤ -> ℤ) squared, and its Σ₂-coinvariants, which are not acyclic.

use pplab::checkers::chain_counterexample_report;

fn main() -> pplab::error::Result<()> {
    let report = chain_counterexample_report()?;
    for v in &report.instances[0].verdicts {
        let w: Vec<String> = v.witnesses.iter().map(|w| format!("{} = {}", w.label, w.detail)).collect();
        println!("[{}] {}: {}", if v.pass { "ok" } else { "FAIL" }, v.claim, w.join(", "));
    }
    Ok(())
}

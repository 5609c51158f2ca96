//! The chain complex `A = [ℤ -> ℤ]` whose square has non-exact coinvariants.

use serde_json::json;

use super::report::{CheckReport, Instance};
use super::verdict::Verdict;
use crate::chain::{complex_homology, sign_action_power, tensor_complex, ChainComplex, FPAbelianGroup, IntMatrix};
use crate::chain::engine::chain_coinvariants;
use crate::error::Result;

/// Open half of the claim: cofibrancy is not decided here.
pub const COFIBRANCY_UNDECIDED: &str = "cofibrancy-undecided";

fn groups_in(c: &ChainComplex, degrees: &[i64]) -> Vec<FPAbelianGroup> {
    degrees.iter().map(|&k| c.group(k)).collect()
}

fn matches(actual: &[FPAbelianGroup], expected: &[FPAbelianGroup]) -> bool {
    actual.len() == expected.len() && actual.iter().zip(expected).all(|(a, b)| a.isomorphic(b))
}

fn show(gs: &[FPAbelianGroup]) -> String {
    gs.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn chain_counterexample_report() -> Result<CheckReport> {
    let a = ChainComplex::disk(1);
    let aa = tensor_complex(&a, &a);
    let z = FPAbelianGroup::free(1);
    let z2 = FPAbelianGroup::from_invariants(0, &[2])?;
    let zero = FPAbelianGroup::zero();

    let d2 = aa.diff(2);
    let d1 = aa.diff(1);
    let d2_ok = d2 == IntMatrix::from_rows(&[vec![1], vec![-1]]);
    let d1_ok = d1 == IntMatrix::from_rows(&[vec![1, 1]]);
    let square = Verdict::new("differentials of A⊗A", d2_ok && d1_ok)
        .witness("d2", format!("{d2:?}"))
        .witness("d1", format!("{d1:?}"));

    let h_square = complex_homology(&aa)?;
    let acyclic = h_square.iter().all(|g| g.is_trivial());
    let sanity = Verdict::new("A⊗A is acyclic", acyclic).witness("homology", show(&h_square));

    let action = sign_action_power(&a, 2)?;
    let swap = &action.maps[1];
    let sign_ok = swap.matrix(2) == IntMatrix::from_rows(&[vec![-1]]);
    let sign = Verdict::new("swap acts by -1 on the top generator", sign_ok).witness("degree 2", format!("{:?}", swap.matrix(2)));

    let q = chain_coinvariants(&action)?;
    let degreewise = groups_in(&q, &[2, 1, 0]);
    let expected = [z2.clone(), z.clone(), z.clone()];
    let coinv = Verdict::new("coinvariant groups in degrees 2, 1, 0", matches(&degreewise, &expected))
        .witness("groups", show(&degreewise))
        .witness("d1", format!("{:?}", q.diff(1)));

    let h = complex_homology(&q)?;
    let h_degrees: Vec<FPAbelianGroup> = (0..=2).map(|k| h.get((k - q.lo()) as usize).cloned().unwrap_or_else(FPAbelianGroup::zero)).collect();
    let expected_h = [zero.clone(), zero, z2];
    let exact = h_degrees.iter().all(|g| g.is_trivial());
    let homology = Verdict::new("coinvariant homology in degrees 0, 1, 2", matches(&h_degrees, &expected_h))
        .witness("homology", show(&h_degrees));
    let not_exact = Verdict::new("coinvariants of A⊗A are not exact", !exact)
        .flag(COFIBRANCY_UNDECIDED)
        .witness("nonzero class", format!("H2 = {}", h_degrees[2]));

    Ok(CheckReport {
        suite: "chain-counterexample".into(),
        seed: "0".into(),
        instances: vec![Instance {
            key: "A = [Z -> Z] in degrees 1, 0".into(),
            inputs: json!({ "A": a.to_json(), "n": "2" }),
            verdicts: vec![square, sanity, sign, coinv, homology, not_exact],
            millis: "0".into(),
        }],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes() {
        let r = chain_counterexample_report().unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.instances[0].verdicts.len(), 6);
    }
}

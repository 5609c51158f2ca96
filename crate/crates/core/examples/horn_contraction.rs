//! Contracts y □ (Λ²₁ -> Δ²)^{□2} onto its far end and checks the homotopy cell by cell.

use std::sync::Arc;

use pplab::checkers::{build_power_contraction, check_symmetroidal_instance};
use pplab::pp::{EquivariantArrow, MultiIndex};
use pplab::sset::{cell_inclusion, generate_cell, verify_homotopy, CellKind, SSet, SimplicialMap};

fn main() -> pplab::error::Result<()> {
    let n = MultiIndex::single(2)?;
    let pt = generate_cell(CellKind::Simplex, 0, None)?;
    let y = EquivariantArrow::trivial(&SSet, Arc::new(n.group()), SimplicialMap::from_empty(&pt));
    let w = build_power_contraction(&y, &[(2, 1)], &n)?;
    println!("homotopy on {:?} cells: {}", w.source.counts(), verify_homotopy(&w)?.pass);
    let horn = cell_inclusion(CellKind::Horn, 2, Some(1))?;
    let v = check_symmetroidal_instance(&y, &[horn], &n, true)?;
    println!("{}: {}", v.claim, v.pass);
    for w in &v.witnesses {
        println!("  {}: {}", w.label, w.detail);
    }
    Ok(())
}

//! Collapsing a circle at both ends: the strict pushout is a point, the homotopy pushout a sphere.

use pplab::checkers::strict_vs_homotopy_pushout;
use pplab::sset::{generate_cell, CellKind, SimplicialMap};

fn main() -> pplab::error::Result<()> {
    let pt = generate_cell(CellKind::Simplex, 0, None)?;
    let circle = generate_cell(CellKind::Boundary, 2, None)?;
    let c = SimplicialMap::constant(&circle, &pt, 0)?;
    let v = strict_vs_homotopy_pushout(&c, &c, 2)?;
    for w in &v.witnesses {
        println!("{}: {}", w.label, w.detail);
    }
    Ok(())
}

//! Homology of a few simplicial sets: a circle, a sphere, and skeleta of BΣ₂.

use pplab::checkers::bsigma_homology;
use pplab::sset::homology::homology_table;
use pplab::sset::{generate_cell, sset_homology, CellKind};

fn main() -> pplab::error::Result<()> {
    for m in [2, 3] {
        let x = generate_cell(CellKind::Boundary, m, None)?;
        println!("∂Δ^{m}: cells {:?}, H = {}", x.counts(), homology_table(&sset_homology(&x, m - 1)?));
    }
    println!("BΣ₂ through degree 5: {}", homology_table(&bsigma_homology(2, 6, 5)?));
    Ok(())
}

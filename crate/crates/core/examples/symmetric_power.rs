//! The square of ∂Δ¹ -> Δ¹ under the swap: the diagonal edge is fixed, so the
//! power is not a projective cofibration, yet its orbits still form a mono.

use pplab::checkers::check_projective_cofibration;
use pplab::engine::Engine;
use pplab::pp::{coinvariant_arrow, pp_power};
use pplab::sset::{cell_inclusion, CellKind, SSet};

fn main() -> pplab::error::Result<()> {
    let f = cell_inclusion(CellKind::Boundary, 1, None)?;
    let (p, eq) = pp_power(&SSet, &f, 2)?;
    println!("f^□2 : {} -> {}", SSet.describe(&SSet.dom(&p.arrow)), SSet.describe(&SSet.cod(&p.arrow)));
    let v = check_projective_cofibration(&f, 2)?;
    for w in &v.witnesses {
        println!("  {}: {}", w.label, w.detail);
    }
    let c = coinvariant_arrow(&SSet, &eq)?;
    println!("orbits: {} -> {}, mono {}", SSet.describe(&SSet.dom(&c.arrow)), SSet.describe(&SSet.cod(&c.arrow)), SSet.is_mono(&c.arrow));
    Ok(())
}

//! Pushout product of two injections of finite sets.

use pplab::engine::{Engine, FinSet, FinSetMap};
use pplab::pp::pp;

fn main() -> pplab::error::Result<()> {
    let e = FinSet;
    let f = FinSetMap::new(2, vec![0])?; // 1 -> 2
    let g = FinSetMap::new(3, vec![0, 2])?; // 2 -> 3
    let p = pp(&e, &f, &g)?;
    println!("f □ g : {} -> {}", e.describe(&e.dom(&p.arrow)), e.describe(&e.cod(&p.arrow)));
    println!("table {:?}, injective {}", p.arrow.table, p.arrow.is_injective());
    Ok(())
}

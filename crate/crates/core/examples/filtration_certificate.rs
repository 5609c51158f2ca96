//! Decomposes (v₁v₀)^{□(2,1)} into pushouts of the maps m_k and replays the result.

use pplab::engine::{FinSet, FinSetMap};
use pplab::filtration::{decompose_composite_power, verify_certificate, FiltrationCertificate};
use pplab::pp::MultiIndex;

fn main() -> pplab::error::Result<()> {
    let e = FinSet;
    let v0 = vec![FinSetMap::new(2, vec![0])?, FinSetMap::new(1, vec![])?];
    let v1 = vec![FinSetMap::new(3, vec![0, 2])?, FinSetMap::new(2, vec![1])?];
    let n = MultiIndex::new(vec![2, 1])?;
    let c = decompose_composite_power(&e, &v0, &v1, &n)?;
    for s in &c.steps {
        println!("k = {:<6} orbit {:>2} tuples, {} cosets, cocartesian {}", s.k.to_string(), s.orbit.len(), s.coset_count, s.cocartesian);
    }
    println!("replay: {}", verify_certificate(&e, &c)?.pass);
    println!("json replay: {}", FiltrationCertificate::verify_json(&e, &c.to_json(&e))?.pass);
    Ok(())
}

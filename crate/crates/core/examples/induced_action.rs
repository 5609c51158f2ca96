//! Induction from S₂ to S₃ and the coset decomposition of the result.

use std::sync::Arc;

use pplab::engine::{induce, Engine, FinGroup, FinSet, FinSetMap, FinSetObj, GroupAction, Homomorphism};

fn main() -> pplab::error::Result<()> {
    let g = Arc::new(FinGroup::symmetric(3)?);
    let h = Arc::new(g.generated(&[g.index_of(&[1, 0, 2]).expect("transposition")])?);
    // S₂ swapping two points
    let x = GroupAction::new(&FinSet, h.clone(), FinSetObj(2), vec![FinSetMap::identity(2), FinSetMap::new(2, vec![1, 0])?])?;
    let emb = Homomorphism::by_permutations(h.clone(), g.clone())?;
    let ind = induce(&FinSet, &emb, &x)?;
    println!("|G ·_H X| = {}, cosets {:?}", ind.action.object.0, ind.representatives);
    println!("comparison is an isomorphism: {}", FinSet.is_iso(&ind.comparison));
    Ok(())
}

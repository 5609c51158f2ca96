//! Pushout products of pushout squares.

use super::verdict::Verdict;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::pp::{is_cocartesian, pp_square, ArrowSquare};

/// Checks that `σ □ g` is a pushout square for a pushout square `σ`.
pub fn check_pp_preserves_pushout<E: Engine>(engine: &E, square: &ArrowSquare<E>, g: &E::Mor) -> Result<Verdict> {
    if !is_cocartesian(engine, square)? {
        return Err(Error::Precondition("input square is not cocartesian".into()));
    }
    let boxed = pp_square(engine, square, g)?;
    let pass = is_cocartesian(engine, &boxed)?;
    let mut v = Verdict::new("pushout product preserves pushouts", pass);
    if !pass {
        v = v.witness("gap map", format!("not an isomorphism onto {}", engine.describe(&engine.cod(&boxed.target))));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{FinSet, FinSetMap};

    #[test]
    fn identity_and_pushout_squares() {
        let e = FinSet;
        let f = FinSetMap::new(3, vec![0, 2]).unwrap();
        let g = FinSetMap::new(2, vec![1]).unwrap();
        let id = ArrowSquare::identity(&e, &f);
        assert!(check_pp_preserves_pushout(&e, &id, &g).unwrap().pass);
        let top = FinSetMap::new(1, vec![0, 0]).unwrap();
        let po = e.pushout(&f, &top).unwrap();
        let sq = ArrowSquare::new(&e, f.clone(), po.legs[1].clone(), top, po.legs[0].clone()).unwrap();
        assert!(check_pp_preserves_pushout(&e, &sq, &g).unwrap().pass);
        let bad = ArrowSquare::new(&e, f.clone(), FinSetMap::identity(1), top_of(&f), FinSetMap::new(1, vec![0, 0, 0]).unwrap()).unwrap();
        assert!(matches!(check_pp_preserves_pushout(&e, &bad, &g), Err(Error::Precondition(_))));
    }

    fn top_of(f: &FinSetMap) -> FinSetMap {
        FinSetMap::new(1, vec![0; f.table.len()]).unwrap()
    }
}

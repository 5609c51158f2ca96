//! Canonical comparison squares between pushout products and the laws they
//! are expected to satisfy.

use super::{corner_arrow, corner_objects, pp, pp_family, pp_map, pp_permuted, ArrowSquare, PPResult};
use crate::engine::finset::finset_product;
use crate::engine::{Engine, FinSet, FinSetMap, FinSetObj};
use crate::error::{structural, Result};
use crate::sset::{discrete_map, sset_product, SSet, SimplicialMap};

/// Comparison from the family `fs ++ [h]` to the left-nested `(□fs) □ h`.
/// Returns the square and the family result.
pub fn compare_left_nested<E: Engine>(engine: &E, fs: &[E::Mor], h: &E::Mor) -> Result<(ArrowSquare<E>, PPResult<E>)> {
    let inner = pp_family(engine, fs)?;
    let outer = pp(engine, &inner.arrow, h)?;
    let mut all = fs.to_vec();
    all.push(h.clone());
    let family = pp_family(engine, &all)?;
    let m = fs.len();
    let low = (1u32 << m) - 1;
    let (xh, yh) = (engine.dom(h), engine.cod(h));
    let top = family.induce_from_corners(engine, outer.domain(), |mask| {
        let rest = mask & low;
        if mask >> m & 1 == 1 {
            let into = engine.tensor_mor(inner.corner_leg(rest)?, &engine.identity(&yh));
            engine.compose(outer.corner_leg(0b10)?, &into)
        } else {
            let up = engine.tensor_mor(&corner_arrow(engine, fs, rest, low)?, &engine.identity(&xh));
            engine.compose(outer.corner_leg(0b01)?, &up)
        }
    })?;
    let bottom = engine.identity(&engine.cod(&family.arrow));
    let sq = ArrowSquare::new(engine, family.arrow.clone(), outer.arrow.clone(), top, bottom)?;
    Ok((sq, family))
}

/// `a_0 ⊗ a_1 ⊗ … ⊗ a_k` (left-nested) to `a_0 ⊗ (a_1 ⊗ … ⊗ a_k)`.
pub fn reassociate_head<E: Engine>(engine: &E, head: &E::Obj, rest: &[E::Obj]) -> Result<E::Mor> {
    match rest.split_last() {
        None => Ok(engine.identity(head)),
        Some((_, [])) => Ok(engine.identity(&engine.tensor(head, &rest[0]))),
        Some((last, init)) => {
            let earlier = reassociate_head(engine, head, init)?;
            let step = engine.tensor_mor(&earlier, &engine.identity(last));
            let assoc = engine.associator(head, &engine.tensor_many(init), last);
            engine.compose(&assoc, &step)
        }
    }
}

/// Comparison from the family `[f] ++ gs` to the right-nested `f □ (□gs)`.
pub fn compare_right_nested<E: Engine>(engine: &E, f: &E::Mor, gs: &[E::Mor]) -> Result<(ArrowSquare<E>, PPResult<E>)> {
    let inner = pp_family(engine, gs)?;
    let outer = pp(engine, f, &inner.arrow)?;
    let mut all = vec![f.clone()];
    all.extend_from_slice(gs);
    let family = pp_family(engine, &all)?;
    let full_rest = (1u32 << gs.len()) - 1;
    let split = |mask: u32| -> Result<E::Mor> {
        let objs = corner_objects(engine, &all, mask);
        reassociate_head(engine, &objs[0], &objs[1..])
    };
    let top = family.induce_from_corners(engine, outer.domain(), |mask| {
        let rest = mask >> 1;
        let local = if mask & 1 == 1 {
            let into = engine.tensor_mor(&engine.identity(&engine.cod(f)), inner.corner_leg(rest)?);
            engine.compose(outer.corner_leg(0b01)?, &into)?
        } else {
            let up = engine.tensor_mor(&engine.identity(&engine.dom(f)), &corner_arrow(engine, gs, rest, full_rest)?);
            engine.compose(outer.corner_leg(0b10)?, &up)?
        };
        engine.compose(&local, &split(mask)?)
    })?;
    let bottom = split(family.full_mask())?;
    let sq = ArrowSquare::new(engine, family.arrow.clone(), outer.arrow.clone(), top, bottom)?;
    Ok((sq, family))
}

/// The comparison `f □ g -> g □ f` built from the symmetry.
pub fn compare_symmetry<E: Engine>(engine: &E, f: &E::Mor, g: &E::Mor) -> Result<ArrowSquare<E>> {
    let p = pp(engine, f, g)?;
    let q = pp(engine, g, f)?;
    pp_permuted(engine, &p, &q, &[1, 0])
}

/// `σ □ g` for a square `σ` between arrows and an arrow `g`.
pub fn pp_square<E: Engine>(engine: &E, sigma: &ArrowSquare<E>, g: &E::Mor) -> Result<ArrowSquare<E>> {
    let p = pp(engine, &sigma.source, g)?;
    let q = pp(engine, &sigma.target, g)?;
    pp_map(engine, &p, &q, &[sigma.clone(), ArrowSquare::identity(engine, g)])
}

/// The map `B ⊔_A C -> D` for a square with `source: A -> B`, `top: A -> C`.
fn gap_map<E: Engine>(engine: &E, sq: &ArrowSquare<E>) -> Result<E::Mor> {
    let po = engine.pushout(&sq.source, &sq.top)?;
    po.induced(engine, &[sq.bottom.clone(), sq.target.clone()], &engine.cod(&sq.target))
        .ok_or_else(|| structural("square does not commute"))
}

/// Whether the square is a pushout square.
pub fn is_cocartesian<E: Engine>(engine: &E, sq: &ArrowSquare<E>) -> Result<bool> {
    if !sq.commutes(engine)? {
        return Ok(false);
    }
    Ok(engine.is_iso(&gap_map(engine, sq)?))
}

/// Cofibrations of the arrow category: the top map and the gap map are monos.
pub fn is_arrow_cofibration<E: Engine>(engine: &E, sq: &ArrowSquare<E>) -> Result<bool> {
    if !sq.commutes(engine)? || !engine.is_mono(&sq.top) {
        return Ok(false);
    }
    Ok(engine.is_mono(&gap_map(engine, sq)?))
}

/// Pieces of the decomposition of `x □ (y ∘ z)`.
#[derive(Debug, Clone)]
pub struct CompositionLaw<E: Engine> {
    /// `dom(x □ yz) -> P`, the pushout of `x □ z` along the canonical map.
    pub pushed: E::Mor,
    /// `P -> dom(x □ y)`.
    pub comparison: E::Mor,
    pub composite: E::Mor,
    pub direct: E::Mor,
}

impl<E: Engine> CompositionLaw<E> {
    pub fn holds(&self, engine: &E) -> bool {
        engine.is_iso(&self.comparison) && engine.equal_morphisms(&self.composite, &self.direct)
    }
}

/// Builds `x □ (y ∘ z)` directly and as the pushout of `x □ z` along
/// `dom(x □ z) -> dom(x □ yz)` followed by `x □ y`.
pub fn composition_law<E: Engine>(engine: &E, x: &E::Mor, y: &E::Mor, z: &E::Mor) -> Result<CompositionLaw<E>> {
    let yz = engine.compose(y, z)?;
    let pxz = pp(engine, x, z)?;
    let pxy = pp(engine, x, y)?;
    let pxyz = pp(engine, x, &yz)?;
    let ix = ArrowSquare::identity(engine, x);
    let extend = ArrowSquare::new(engine, z.clone(), yz.clone(), engine.identity(&engine.dom(z)), y.clone())?;
    let canonical = pp_map(engine, &pxz, &pxyz, &[ix.clone(), extend])?;
    let po = engine.pushout(&canonical.top, &pxz.arrow)?;
    let shrink = ArrowSquare::new(engine, yz.clone(), y.clone(), z.clone(), engine.identity(&engine.cod(y)))?;
    let to_xy = pp_map(engine, &pxyz, &pxy, &[ix, shrink])?;
    let comparison = po
        .induced(engine, &[to_xy.top, pxy.corner_leg(0b01)?.clone()], pxy.domain())
        .ok_or_else(|| structural("comparison legs disagree"))?;
    let pushed = po.legs[0].clone();
    let composite = engine.compose(&pxy.arrow, &engine.compose(&comparison, &pushed)?)?;
    Ok(CompositionLaw { pushed, comparison, composite, direct: pxyz.arrow })
}

/// Compares `f □ g` of simplicial sets with the discrete image of `f □ g`
/// of finite sets. The square runs from the simplicial pushout product to the
/// discrete one; both horizontal maps are isomorphisms when the embedding is
/// strong monoidal and preserves the pushout.
pub fn discrete_comparison(f: &FinSetMap, g: &FinSetMap) -> Result<ArrowSquare<SSet>> {
    let (fe, se) = (FinSet, SSet);
    let pf = pp(&fe, f, g)?;
    let (df, dg) = (discrete_map(f), discrete_map(g));
    let ps = pp(&se, &df, &dg)?;
    // D(A × B) -> D(A) × D(B) and back
    let to_product = |a: usize, b: usize| -> Result<(SimplicialMap, SimplicialMap)> {
        let (_, p1, p2) = finset_product(FinSetObj(a), FinSetObj(b));
        let prod = sset_product(&discrete_map(&p1).cod, &discrete_map(&p2).cod);
        let phi = prod.pairing(&discrete_map(&p1), &discrete_map(&p2))?;
        let inverse = se
            .factor_through_mono(&phi, &SimplicialMap::identity(&phi.cod))
            .ok_or_else(|| structural("discrete product comparison is not invertible"))?;
        Ok((phi, inverse))
    };
    let discrete_target = discrete_map(&pf.arrow);
    let top = ps.induce_from_corners(&se, &discrete_target.dom, |mask| {
        let objs = corner_objects(&fe, &pf.factors, mask);
        let (_, back) = to_product(objs[0].0, objs[1].0)?;
        back.then(&discrete_map(pf.corner_leg(mask)?))
    })?;
    let (_, bottom) = to_product(f.cod, g.cod)?;
    ArrowSquare::new(&se, ps.arrow.clone(), discrete_target, top, bottom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{cell_inclusion, CellKind};

    fn inj(dom: usize, cod: usize, table: Vec<usize>) -> FinSetMap {
        assert_eq!(table.len(), dom);
        FinSetMap::new(cod, table).unwrap()
    }

    #[test]
    fn finset_laws() {
        let e = FinSet;
        let f = inj(1, 2, vec![1]);
        let g = inj(2, 3, vec![0, 2]);
        let h = inj(0, 2, vec![]);
        assert!(compare_symmetry(&e, &f, &g).unwrap().is_isomorphism(&e).unwrap());
        let (left, _) = compare_left_nested(&e, &[f.clone(), g.clone()], &h).unwrap();
        assert!(left.is_isomorphism(&e).unwrap());
        let (right, _) = compare_right_nested(&e, &f, &[g.clone(), h.clone()]).unwrap();
        assert!(right.is_isomorphism(&e).unwrap());
        let y = inj(3, 4, vec![0, 1, 3]);
        assert!(composition_law(&e, &f, &y, &g).unwrap().holds(&e));
        assert!(discrete_comparison(&f, &g).unwrap().is_isomorphism(&SSet).unwrap());
    }

    #[test]
    fn cocartesian_squares() {
        let e = FinSet;
        // the pushout of 1 <- 1 -> 2 is 2
        let a = inj(1, 2, vec![0]);
        let sq = ArrowSquare::new(&e, a.clone(), a.clone(), FinSetMap::identity(1), FinSetMap::identity(2)).unwrap();
        assert!(is_cocartesian(&e, &sq).unwrap());
        let g = inj(1, 2, vec![1]);
        assert!(is_cocartesian(&e, &pp_square(&e, &sq, &g).unwrap()).unwrap());
        // 1 -> 2 over 1 -> 3 is not a pushout
        let wide = inj(1, 3, vec![0]);
        let bad = ArrowSquare::new(&e, a, wide, FinSetMap::identity(1), inj(2, 3, vec![0, 1])).unwrap();
        assert!(!is_cocartesian(&e, &bad).unwrap());
        assert!(is_arrow_cofibration(&e, &bad).unwrap());
    }

    #[test]
    fn sset_associativity() {
        let e = SSet;
        let b = cell_inclusion(CellKind::Boundary, 1, None).unwrap();
        let h = cell_inclusion(CellKind::Horn, 2, Some(0)).unwrap();
        let (left, _) = compare_left_nested(&e, &[b.clone(), h.clone()], &b).unwrap();
        assert!(left.is_isomorphism(&e).unwrap());
        let (right, _) = compare_right_nested(&e, &b, &[h.clone(), b.clone()]).unwrap();
        assert!(right.is_isomorphism(&e).unwrap());
        assert!(compare_symmetry(&e, &b, &h).unwrap().is_isomorphism(&e).unwrap());
    }
}

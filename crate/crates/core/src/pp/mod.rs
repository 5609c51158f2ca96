//! Pushout products of arrows, computed as colimits over punctured cubes.
//!
//! A corner of the cube for factors `f_0, …, f_{n-1}` is a bitmask: bit `i`
//! set means factor `i` sits at its codomain. The corner object is the
//! left-nested tensor of the chosen ends.

pub mod equivariant;
pub mod laws;
pub mod multi;

use std::collections::BTreeMap;

use crate::engine::{poset_colimit, Colimit, DiagramOnPoset, Engine, Poset};
use crate::error::{invalid, mismatch, structural, Result};

pub use equivariant::{
    coinv_pp, coinvariant_arrow, pp_equivariant, pp_multi, pp_power, pp_with_group, tensor_coinv, CoinvariantArrow,
    EquivariantArrow,
};
pub use laws::{
    compare_left_nested, compare_right_nested, compare_symmetry, composition_law, discrete_comparison,
    is_arrow_cofibration, is_cocartesian, pp_square,
};
pub use multi::MultiIndex;

/// Largest family accepted by [`pp_family`]; the cube has `2^n` corners.
pub const MAX_FACTORS: usize = 12;

/// A commutative square from `source: A -> B` to `target: C -> D`, with
/// `top: A -> C` and `bottom: B -> D`.
#[derive(Debug, Clone)]
pub struct ArrowSquare<E: Engine> {
    pub source: E::Mor,
    pub target: E::Mor,
    pub top: E::Mor,
    pub bottom: E::Mor,
}

impl<E: Engine> ArrowSquare<E> {
    pub fn new(engine: &E, source: E::Mor, target: E::Mor, top: E::Mor, bottom: E::Mor) -> Result<Self> {
        let sq = Self { source, target, top, bottom };
        if !sq.commutes(engine)? {
            return Err(structural("square does not commute"));
        }
        Ok(sq)
    }

    pub fn identity(engine: &E, f: &E::Mor) -> Self {
        Self {
            source: f.clone(),
            target: f.clone(),
            top: engine.identity(&engine.dom(f)),
            bottom: engine.identity(&engine.cod(f)),
        }
    }

    pub fn commutes(&self, engine: &E) -> Result<bool> {
        let ends = [
            (engine.dom(&self.top), engine.dom(&self.source)),
            (engine.cod(&self.top), engine.dom(&self.target)),
            (engine.dom(&self.bottom), engine.cod(&self.source)),
            (engine.cod(&self.bottom), engine.cod(&self.target)),
        ];
        if ends.iter().any(|(a, b)| !engine.same_object(a, b)) {
            return Err(mismatch("square edges do not meet"));
        }
        let lhs = engine.compose(&self.target, &self.top)?;
        let rhs = engine.compose(&self.bottom, &self.source)?;
        Ok(engine.equal_morphisms(&lhs, &rhs))
    }

    /// Commutes with both horizontal maps isomorphisms.
    pub fn is_isomorphism(&self, engine: &E) -> Result<bool> {
        Ok(self.commutes(engine)? && engine.is_iso(&self.top) && engine.is_iso(&self.bottom))
    }
}

/// The pushout product of a family, with the cocone exhibiting its domain.
#[derive(Debug, Clone)]
pub struct PPResult<E: Engine> {
    pub arrow: E::Mor,
    pub factors: Vec<E::Mor>,
    /// Colimit presenting the domain.
    pub colimit: Colimit<E>,
    /// Corner mask of each colimit summand.
    pub summand_masks: Vec<u32>,
    /// Every proper corner with its leg into the domain.
    pub corner_legs: BTreeMap<u32, E::Mor>,
}

impl<E: Engine> PPResult<E> {
    pub fn domain(&self) -> &E::Obj {
        &self.colimit.object
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.factors.len()) - 1
    }

    pub fn corner_leg(&self, mask: u32) -> Result<&E::Mor> {
        self.corner_legs.get(&mask).ok_or_else(|| invalid(format!("no proper corner {mask:b}")))
    }

    /// The map out of the domain determined by a map out of every summand corner.
    pub fn induce_from_corners(
        &self,
        engine: &E,
        target: &E::Obj,
        mut leg: impl FnMut(u32) -> Result<E::Mor>,
    ) -> Result<E::Mor> {
        let legs = self.summand_masks.iter().map(|&m| leg(m)).collect::<Result<Vec<_>>>()?;
        self.colimit
            .induced(engine, &legs, target)
            .ok_or_else(|| structural("corner maps do not form a cocone"))
    }
}

/// Ends of each factor at a corner.
pub fn corner_objects<E: Engine>(engine: &E, factors: &[E::Mor], mask: u32) -> Vec<E::Obj> {
    factors
        .iter()
        .enumerate()
        .map(|(i, f)| if mask >> i & 1 == 1 { engine.cod(f) } else { engine.dom(f) })
        .collect()
}

pub fn corner_object<E: Engine>(engine: &E, factors: &[E::Mor], mask: u32) -> E::Obj {
    engine.tensor_many(&corner_objects(engine, factors, mask))
}

/// The cube map from corner `from` to corner `to ⊇ from`.
pub fn corner_arrow<E: Engine>(engine: &E, factors: &[E::Mor], from: u32, to: u32) -> Result<E::Mor> {
    if from & !to != 0 {
        return Err(invalid(format!("corner {from:b} is not below {to:b}")));
    }
    let parts: Vec<E::Mor> = factors
        .iter()
        .enumerate()
        .map(|(i, f)| match (from >> i & 1, to >> i & 1) {
            (0, 1) => f.clone(),
            (0, _) => engine.identity(&engine.dom(f)),
            _ => engine.identity(&engine.cod(f)),
        })
        .collect();
    Ok(engine.tensor_mor_many(&parts))
}

/// `f □ g : X₁⊗Y₂ ⊔_{X₁⊗X₂} Y₁⊗X₂ -> Y₁⊗Y₂`, computed as a single pushout.
pub fn pp<E: Engine>(engine: &E, f: &E::Mor, g: &E::Mor) -> Result<PPResult<E>> {
    let (x1, y1, x2, y2) = (engine.dom(f), engine.cod(f), engine.dom(g), engine.cod(g));
    let along_g = engine.tensor_mor(&engine.identity(&x1), g);
    let along_f = engine.tensor_mor(f, &engine.identity(&x2));
    let colimit = engine.pushout(&along_g, &along_f)?;
    let legs = [engine.tensor_mor(f, &engine.identity(&y2)), engine.tensor_mor(&engine.identity(&y1), g)];
    let arrow = colimit
        .induced(engine, &legs, &engine.tensor(&y1, &y2))
        .ok_or_else(|| structural("pushout product legs do not agree"))?;
    let corner_legs = BTreeMap::from([
        (0b00, engine.compose(&colimit.legs[0], &along_g)?),
        (0b01, colimit.legs[1].clone()),
        (0b10, colimit.legs[0].clone()),
    ]);
    Ok(PPResult { arrow, factors: vec![f.clone(), g.clone()], colimit, summand_masks: vec![0b10, 0b01], corner_legs })
}

/// The pushout product of a nonempty family as the colimit over all proper corners.
pub fn pp_family<E: Engine>(engine: &E, factors: &[E::Mor]) -> Result<PPResult<E>> {
    let n = factors.len();
    if n == 0 {
        return Err(invalid("pushout product of an empty family"));
    }
    if n > MAX_FACTORS {
        return Err(invalid(format!("pushout product of more than {MAX_FACTORS} factors")));
    }
    let full = (1u32 << n) - 1;
    let masks: Vec<u32> = (0..full).collect();
    let poset = Poset::from_fn(&masks, |a, b| a & !b == 0, |m| format!("{m:0n$b}"))?;
    let objects = masks.iter().map(|&m| corner_object(engine, factors, m)).collect();
    let arrows = poset
        .covers()
        .into_iter()
        .map(|(a, b)| Ok(((a, b), corner_arrow(engine, factors, masks[a], masks[b])?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let diagram = DiagramOnPoset::new(poset, objects, arrows)?;
    let colimit = poset_colimit(engine, &diagram)?;
    let legs = masks
        .iter()
        .map(|&m| corner_arrow(engine, factors, m, full))
        .collect::<Result<Vec<_>>>()?;
    let arrow = colimit
        .induced(engine, &legs, &corner_object(engine, factors, full))
        .ok_or_else(|| structural("cube legs do not form a cocone"))?;
    let corner_legs = masks.iter().copied().zip(colimit.legs.iter().cloned()).collect();
    Ok(PPResult { arrow, factors: factors.to_vec(), colimit, summand_masks: masks, corner_legs })
}

/// The map of pushout products induced by one square per factor.
pub fn pp_map<E: Engine>(engine: &E, p: &PPResult<E>, q: &PPResult<E>, squares: &[ArrowSquare<E>]) -> Result<ArrowSquare<E>> {
    if squares.len() != p.factors.len() || squares.len() != q.factors.len() {
        return Err(mismatch("one square per factor is required"));
    }
    let piece = |mask: u32| -> E::Mor {
        let parts: Vec<E::Mor> = squares
            .iter()
            .enumerate()
            .map(|(i, s)| if mask >> i & 1 == 1 { s.bottom.clone() } else { s.top.clone() })
            .collect();
        engine.tensor_mor_many(&parts)
    };
    let top = p.induce_from_corners(engine, q.domain(), |m| engine.compose(q.corner_leg(m)?, &piece(m)))?;
    ArrowSquare::new(engine, p.arrow.clone(), q.arrow.clone(), top, piece(p.full_mask()))
}

/// Relabels the factors: the factor at position `i` of `p` sits at position
/// `perm[i]` of `q`. The square is built from place permutations.
pub fn pp_permuted<E: Engine>(engine: &E, p: &PPResult<E>, q: &PPResult<E>, perm: &[usize]) -> Result<ArrowSquare<E>> {
    let n = p.factors.len();
    if perm.len() != n || q.factors.len() != n {
        return Err(mismatch("permutation degree differs from factor count"));
    }
    for (i, &j) in perm.iter().enumerate() {
        if !engine.equal_morphisms(&p.factors[i], &q.factors[j]) {
            return Err(mismatch(format!("factor {i} is not factor {j} of the target")));
        }
    }
    let moved = |mask: u32| (0..n).filter(|&i| mask >> i & 1 == 1).fold(0u32, |acc, i| acc | 1 << perm[i]);
    let top = p.induce_from_corners(engine, q.domain(), |m| {
        let shuffle = engine.permute_factors(&corner_objects(engine, &p.factors, m), perm)?;
        engine.compose(q.corner_leg(moved(m))?, &shuffle)
    })?;
    let bottom = engine.permute_factors(&corner_objects(engine, &p.factors, p.full_mask()), perm)?;
    ArrowSquare::new(engine, p.arrow.clone(), q.arrow.clone(), top, bottom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{FinSet, FinSetMap, FinSetObj};
    use crate::sset::{cell_inclusion, CellKind, SSet, SimplicialSet};

    fn boundary() -> crate::sset::SimplicialMap {
        cell_inclusion(CellKind::Boundary, 1, None).unwrap()
    }

    #[test]
    fn square_boundary() {
        let e = SSet;
        let r = pp(&e, &boundary(), &boundary()).unwrap();
        assert_eq!(r.domain().counts(), vec![4, 4]);
        assert!(e.is_mono(&r.arrow));
        let fam = pp_family(&e, &[boundary(), boundary()]).unwrap();
        assert_eq!(fam.domain().counts(), vec![4, 4]);
    }

    #[test]
    fn cube_boundary() {
        let e = SSet;
        let r = pp_family(&e, &[boundary(), boundary(), boundary()]).unwrap();
        let d: &SimplicialSet = r.domain();
        assert_eq!(d.euler_characteristic(), 2);
        assert!(e.is_mono(&r.arrow));
        assert_eq!(r.corner_legs.len(), 7);
    }

    #[test]
    fn empty_corners_in_finset() {
        let e = FinSet;
        let v = FinSetMap::new(1, vec![]).unwrap();
        let r = pp_family(&e, &[v.clone(), v.clone(), v]).unwrap();
        assert_eq!(*r.domain(), FinSetObj(0));
        assert_eq!(e.cod(&r.arrow), FinSetObj(1));
    }

    #[test]
    fn unit_and_isomorphisms() {
        let e = FinSet;
        let unit = FinSetMap::new(1, vec![]).unwrap();
        let f = FinSetMap::new(3, vec![0, 2]).unwrap();
        let r = pp(&e, &unit, &f).unwrap();
        assert_eq!(*r.domain(), FinSetObj(2));
        assert_eq!(r.arrow.table, f.table);
        let iso = FinSetMap::new(2, vec![1, 0]).unwrap();
        assert!(e.is_iso(&pp(&e, &iso, &f).unwrap().arrow));
        let single = pp_family(&e, std::slice::from_ref(&f)).unwrap();
        assert!(e.equal_morphisms(&single.arrow, &f));
    }
}

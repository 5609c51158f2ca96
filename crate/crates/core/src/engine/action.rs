//! Objects with a finite group action, coinvariants and induction `G ·_H X`.

use std::sync::Arc;

use super::group::{FinGroup, Homomorphism};
use super::Engine;
use crate::error::{mismatch, structural, Error, Result};

/// A left action `g ↦ act(g)` of a finite group on an engine object.
#[derive(Debug, Clone)]
pub struct GroupAction<E: Engine> {
    pub group: Arc<FinGroup>,
    pub object: E::Obj,
    /// `maps[g]` is the automorphism by which element `g` acts.
    pub maps: Vec<E::Mor>,
}

impl<E: Engine> GroupAction<E> {
    /// Validates `act(e) = id`, `act(gh) = act(g) ∘ act(h)` and that every
    /// `act(g)` is an isomorphism.
    pub fn new(engine: &E, group: Arc<FinGroup>, object: E::Obj, maps: Vec<E::Mor>) -> Result<Self> {
        let action = Self { group, object, maps };
        action.validate(engine)?;
        Ok(action)
    }

    pub fn trivial(engine: &E, group: Arc<FinGroup>, object: E::Obj) -> Self {
        let id = engine.identity(&object);
        let maps = vec![id; group.order()];
        Self { group, object, maps }
    }

    pub fn validate(&self, engine: &E) -> Result<()> {
        let g = &self.group;
        if self.maps.len() != g.order() {
            return Err(structural("one action map per group element is required"));
        }
        for (a, m) in self.maps.iter().enumerate() {
            if !engine.same_object(&engine.dom(m), &self.object) || !engine.same_object(&engine.cod(m), &self.object) {
                return Err(mismatch(format!("action map of element {a} is not an endomorphism")));
            }
        }
        if !engine.equal_morphisms(&self.maps[g.identity()], &engine.identity(&self.object)) {
            return Err(structural("identity element does not act as the identity"));
        }
        for a in g.elements() {
            for b in g.elements() {
                let ab = engine.compose(&self.maps[a], &self.maps[b])?;
                if !engine.equal_morphisms(&ab, &self.maps[g.mul(a, b)]) {
                    return Err(structural(format!("action law fails at ({a}, {b})")));
                }
            }
        }
        // act(g) ∘ act(g⁻¹) = id already forces each map to be invertible.
        Ok(())
    }

    pub fn act(&self, g: usize) -> &E::Mor {
        &self.maps[g]
    }

    /// Restriction along a homomorphism `H -> G`.
    pub fn restrict(&self, along: &Homomorphism) -> Result<Self> {
        if *along.target != *self.group {
            return Err(mismatch("restriction along a homomorphism into another group"));
        }
        let maps = along.source.elements().map(|h| self.maps[along.apply(h)].clone()).collect();
        Ok(Self { group: along.source.clone(), object: self.object.clone(), maps })
    }

    /// Diagonal action on `self ⊗ other`.
    pub fn tensor(&self, engine: &E, other: &Self) -> Result<Self> {
        if *self.group != *other.group {
            return Err(mismatch("diagonal action needs a common group"));
        }
        let object = engine.tensor(&self.object, &other.object);
        let maps = self
            .group
            .elements()
            .map(|g| engine.tensor_mor(&self.maps[g], &other.maps[g]))
            .collect();
        Ok(Self { group: self.group.clone(), object, maps })
    }
}

/// Checks `f ∘ act_X(g) = act_Y(g) ∘ f` for all `g`.
pub fn check_equivariant<E: Engine>(
    engine: &E,
    source: &GroupAction<E>,
    target: &GroupAction<E>,
    f: &E::Mor,
) -> Result<()> {
    if *source.group != *target.group {
        return Err(mismatch("equivariance between actions of different groups"));
    }
    for g in source.group.elements() {
        let lhs = engine.compose(f, source.act(g))?;
        let rhs = engine.compose(target.act(g), f)?;
        if !engine.equal_morphisms(&lhs, &rhs) {
            return Err(Error::NotEquivariant(format!("fails for group element {g}")));
        }
    }
    Ok(())
}

/// The coinvariant object `X_G` with its projection.
#[derive(Debug, Clone)]
pub struct Coinvariants<E: Engine> {
    pub object: E::Obj,
    pub projection: E::Mor,
}

/// `X_G`: the coequalizer of `⊔_g X ⇉ X` given by the action maps and the identities.
pub fn coinvariants<E: Engine>(engine: &E, action: &GroupAction<E>) -> Result<Coinvariants<E>> {
    let x = &action.object;
    let id = engine.identity(x);
    let acting = engine.copair(&action.maps, x)?;
    let ids = engine.copair(&vec![id; action.maps.len()], x)?;
    let (object, projection) = engine.coequalizer(&acting, &ids)?;
    Ok(Coinvariants { object, projection })
}

/// The map `X_G -> Y_G` induced by an equivariant map.
pub fn coinvariants_map<E: Engine>(
    engine: &E,
    source: &Coinvariants<E>,
    target: &Coinvariants<E>,
    f: &E::Mor,
) -> Result<E::Mor> {
    let h = engine.compose(&target.projection, f)?;
    engine
        .factor_through_epi(&source.projection, &h)
        .ok_or_else(|| structural("map does not descend to coinvariants (not equivariant?)"))
}

/// Result of inducing an `H`-object up to `G`.
#[derive(Debug, Clone)]
pub struct Induced<E: Engine> {
    /// `G ·_H X` with its `G`-action.
    pub action: GroupAction<E>,
    /// `G · X -> G ·_H X`, where `G · X` has one copy of `X` per element of `G`.
    pub quotient: E::Mor,
    /// Coset representatives in the order of [`Homomorphism::left_cosets`].
    pub representatives: Vec<usize>,
    /// `⊔_{cosets} X -> G ·_H X`, copy `r` sent along `q ∘ inj_r`; an
    /// isomorphism by the coset decomposition.
    pub comparison: E::Mor,
}

/// `G ·_H X := (G · X)_H` with `H` acting on `G` from the right and on `X`
/// from the left; the quotient identifies `(g h, x)` with `(g, h x)`.
pub fn induce<E: Engine>(engine: &E, embedding: &Homomorphism, x: &GroupAction<E>) -> Result<Induced<E>> {
    if *embedding.source != *x.group {
        return Err(mismatch("action group differs from the embedded subgroup"));
    }
    if !embedding.is_injective() {
        return Err(structural("subgroup embedding is not injective"));
    }
    // re-validate the homomorphism property
    let embedding = Homomorphism::new(embedding.source.clone(), embedding.target.clone(), embedding.map.clone())?;
    let g = embedding.target.clone();
    let h = embedding.source.clone();
    let copies = vec![x.object.clone(); g.order()];
    let (gx, inj) = engine.coproduct(&copies);

    let mut legs_right = Vec::with_capacity(g.order() * h.order());
    let mut legs_left = Vec::with_capacity(g.order() * h.order());
    for hh in h.elements() {
        for a in g.elements() {
            legs_right.push(inj[g.mul(a, embedding.apply(hh))].clone());
            legs_left.push(engine.compose(&inj[a], x.act(hh))?);
        }
    }
    let r = engine.copair(&legs_right, &gx)?;
    let l = engine.copair(&legs_left, &gx)?;
    let (object, quotient) = engine.coequalizer(&r, &l)?;

    let mut maps = Vec::with_capacity(g.order());
    for b in g.elements() {
        let legs = g
            .elements()
            .map(|a| engine.compose(&quotient, &inj[g.mul(b, a)]))
            .collect::<Result<Vec<_>>>()?;
        let shifted = engine.copair(&legs, &object)?;
        let m = engine
            .factor_through_epi(&quotient, &shifted)
            .ok_or_else(|| structural("left G-action does not descend to G ·_H X"))?;
        maps.push(m);
    }
    let action = GroupAction::new(engine, g.clone(), object.clone(), maps)?;

    let representatives: Vec<usize> = embedding.left_cosets().iter().map(|c| c.representative).collect();
    let comp_legs = representatives
        .iter()
        .map(|&rep| engine.compose(&quotient, &inj[rep]))
        .collect::<Result<Vec<_>>>()?;
    let comparison = engine.copair(&comp_legs, &object)?;
    Ok(Induced { action, quotient, representatives, comparison })
}

/// `G ·_H f` for an `H`-equivariant map `f: X -> Y`.
pub fn induce_map<E: Engine>(
    engine: &E,
    source: &Induced<E>,
    target: &Induced<E>,
    f: &E::Mor,
) -> Result<E::Mor> {
    let order = source.action.group.order();
    let copies_y = vec![engine.cod(f); order];
    let (_, inj_y) = engine.coproduct(&copies_y);
    let legs = inj_y
        .iter()
        .map(|i| engine.compose(&target.quotient, &engine.compose(i, f)?))
        .collect::<Result<Vec<_>>>()?;
    let h = engine.copair(&legs, &target.action.object)?;
    engine
        .factor_through_epi(&source.quotient, &h)
        .ok_or_else(|| structural("map is not H-equivariant; G ·_H f undefined"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::finset::{FinSet, FinSetMap, FinSetObj};

    fn swap_action() -> GroupAction<FinSet> {
        let s2 = Arc::new(FinGroup::symmetric(2).unwrap());
        let e = FinSet;
        GroupAction::new(
            &e,
            s2,
            FinSetObj(2),
            vec![FinSetMap::identity(2), FinSetMap::new(2, vec![1, 0]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn coinvariants_of_swap() {
        let c = coinvariants(&FinSet, &swap_action()).unwrap();
        assert_eq!(c.object, FinSetObj(1));
    }

    #[test]
    fn coinvariants_of_trivial_group() {
        let e = FinSet;
        let a = GroupAction::trivial(&e, Arc::new(FinGroup::trivial()), FinSetObj(3));
        let c = coinvariants(&e, &a).unwrap();
        assert_eq!(c.object, FinSetObj(3));
        assert!(e.is_iso(&c.projection));
    }

    #[test]
    fn coinvariants_of_diagonal_swap_on_square() {
        // Σ2 swapping the factors of a 2×2 grid: orbits {00}, {11}, {01, 10}.
        let e = FinSet;
        let a = swap_action();
        let swap = e.symmetry(&FinSetObj(2), &FinSetObj(2));
        let sq = GroupAction::new(&e, a.group.clone(), FinSetObj(4), vec![FinSetMap::identity(4), swap]).unwrap();
        assert_eq!(coinvariants(&e, &sq).unwrap().object, FinSetObj(3));
    }

    #[test]
    fn free_orbit_from_trivial_subgroup() {
        let e = FinSet;
        let s2 = Arc::new(FinGroup::symmetric(2).unwrap());
        let emb = Homomorphism::trivial_into(s2);
        let pt = GroupAction::trivial(&e, emb.source.clone(), FinSetObj(1));
        let ind = induce(&e, &emb, &pt).unwrap();
        assert_eq!(ind.action.object, FinSetObj(2));
        assert!(e.is_iso(&ind.comparison));
    }

    #[test]
    fn induction_along_identity_is_trivial() {
        let e = FinSet;
        let a = swap_action();
        let ind = induce(&e, &Homomorphism::identity(a.group.clone()), &a).unwrap();
        assert_eq!(ind.action.object, FinSetObj(2));
        assert!(e.is_iso(&ind.comparison));
    }

    #[test]
    fn rejects_bad_action() {
        let e = FinSet;
        let s2 = Arc::new(FinGroup::symmetric(2).unwrap());
        let bad = GroupAction::new(
            &e,
            s2,
            FinSetObj(2),
            vec![FinSetMap::identity(2), FinSetMap::new(2, vec![0, 0]).unwrap()],
        );
        assert!(bad.is_err());
    }
}

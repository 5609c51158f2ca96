//! Arrows with group actions, pushout powers with their place-permutation
//! action, and the quotients `y □_G s^{□n}` and `Y ⊗_G s^{□n}`.

use std::sync::Arc;

use super::multi::MultiIndex;
use super::{pp, pp_family, pp_map, pp_permuted, ArrowSquare, PPResult};
use crate::engine::action::{check_equivariant, coinvariants_map};
use crate::engine::{coinvariants, Coinvariants, Engine, FinGroup, GroupAction};
use crate::error::{invalid, mismatch, Result};

/// An arrow commuting with actions of one group on its ends.
#[derive(Debug, Clone)]
pub struct EquivariantArrow<E: Engine> {
    pub arrow: E::Mor,
    pub source: GroupAction<E>,
    pub target: GroupAction<E>,
}

impl<E: Engine> EquivariantArrow<E> {
    pub fn new(engine: &E, arrow: E::Mor, source: GroupAction<E>, target: GroupAction<E>) -> Result<Self> {
        if !engine.same_object(&engine.dom(&arrow), &source.object)
            || !engine.same_object(&engine.cod(&arrow), &target.object)
        {
            return Err(mismatch("actions are not on the ends of the arrow"));
        }
        check_equivariant(engine, &source, &target, &arrow)?;
        Ok(Self { arrow, source, target })
    }

    pub fn trivial(engine: &E, group: Arc<FinGroup>, arrow: E::Mor) -> Self {
        let source = GroupAction::trivial(engine, group.clone(), engine.dom(&arrow));
        let target = GroupAction::trivial(engine, group, engine.cod(&arrow));
        Self { arrow, source, target }
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.source.group
    }

    /// The square by which element `g` acts.
    pub fn square(&self, g: usize) -> ArrowSquare<E> {
        ArrowSquare {
            source: self.arrow.clone(),
            target: self.arrow.clone(),
            top: self.source.act(g).clone(),
            bottom: self.target.act(g).clone(),
        }
    }
}

/// The pushout product of `factors` with `group` permuting positions. Every
/// permutation must carry each factor to an equal factor.
pub fn pp_with_group<E: Engine>(
    engine: &E,
    factors: &[E::Mor],
    group: Arc<FinGroup>,
) -> Result<(PPResult<E>, EquivariantArrow<E>)> {
    if group.degree() != factors.len() {
        return Err(mismatch("group degree differs from the number of factors"));
    }
    let p = pp_family(engine, factors)?;
    let mut dom_maps = Vec::with_capacity(group.order());
    let mut cod_maps = Vec::with_capacity(group.order());
    for g in group.elements() {
        let sq = pp_permuted(engine, &p, &p, group.perm(g))?;
        dom_maps.push(sq.top);
        cod_maps.push(sq.bottom);
    }
    let source = GroupAction::new(engine, group.clone(), p.domain().clone(), dom_maps)?;
    let target = GroupAction::new(engine, group, engine.cod(&p.arrow), cod_maps)?;
    let eq = EquivariantArrow::new(engine, p.arrow.clone(), source, target)?;
    Ok((p, eq))
}

/// `f^{□n}` with `Σn` permuting the factors.
pub fn pp_power<E: Engine>(engine: &E, f: &E::Mor, n: usize) -> Result<(PPResult<E>, EquivariantArrow<E>)> {
    if n == 0 {
        return Err(invalid("pushout power with exponent 0"));
    }
    let group = Arc::new(FinGroup::symmetric(n)?);
    pp_with_group(engine, &vec![f.clone(); n], group)
}

/// `v_1^{□n_1} □ … □ v_e^{□n_e}` with `∏ Σ_{n_i}` permuting within blocks.
pub fn pp_multi<E: Engine>(
    engine: &E,
    family: &[E::Mor],
    n: &MultiIndex,
) -> Result<(PPResult<E>, EquivariantArrow<E>)> {
    if family.len() != n.len() {
        return Err(mismatch("multi-index length differs from the family size"));
    }
    if n.is_zero() {
        return Err(invalid("multi-index with all entries zero"));
    }
    let factors: Vec<E::Mor> = n.blocks().iter().map(|&b| family[b].clone()).collect();
    pp_with_group(engine, &factors, Arc::new(n.group()))
}

/// `a □ b` with the diagonal action of their common group.
pub fn pp_equivariant<E: Engine>(
    engine: &E,
    a: &EquivariantArrow<E>,
    b: &EquivariantArrow<E>,
) -> Result<(PPResult<E>, EquivariantArrow<E>)> {
    if **a.group() != **b.group() {
        return Err(mismatch("diagonal action needs a common group"));
    }
    let p = pp(engine, &a.arrow, &b.arrow)?;
    let group = a.group().clone();
    let mut dom_maps = Vec::with_capacity(group.order());
    let mut cod_maps = Vec::with_capacity(group.order());
    for g in group.elements() {
        let sq = pp_map(engine, &p, &p, &[a.square(g), b.square(g)])?;
        dom_maps.push(sq.top);
        cod_maps.push(sq.bottom);
    }
    let source = GroupAction::new(engine, group.clone(), p.domain().clone(), dom_maps)?;
    let target = GroupAction::new(engine, group, engine.cod(&p.arrow), cod_maps)?;
    let eq = EquivariantArrow::new(engine, p.arrow.clone(), source, target)?;
    Ok((p, eq))
}

/// An equivariant arrow together with the arrow it induces on coinvariants.
#[derive(Debug, Clone)]
pub struct CoinvariantArrow<E: Engine> {
    pub arrow: E::Mor,
    pub equivariant: EquivariantArrow<E>,
    pub source: Coinvariants<E>,
    pub target: Coinvariants<E>,
}

pub fn coinvariant_arrow<E: Engine>(engine: &E, a: &EquivariantArrow<E>) -> Result<CoinvariantArrow<E>> {
    let source = coinvariants(engine, &a.source)?;
    let target = coinvariants(engine, &a.target)?;
    let arrow = coinvariants_map(engine, &source, &target, &a.arrow)?;
    Ok(CoinvariantArrow { arrow, equivariant: a.clone(), source, target })
}

/// `(y □ s^{□n})_G` with `G = ∏ Σ_{n_i}` acting diagonally.
pub fn coinv_pp<E: Engine>(
    engine: &E,
    y: &EquivariantArrow<E>,
    family: &[E::Mor],
    n: &MultiIndex,
) -> Result<CoinvariantArrow<E>> {
    let (_, power) = pp_multi(engine, family, n)?;
    if **y.group() != **power.group() {
        return Err(mismatch(format!("y must carry an action of the group of {n}")));
    }
    let (_, both) = pp_equivariant(engine, y, &power)?;
    coinvariant_arrow(engine, &both)
}

/// `(Y ⊗ s^{□n})_G` with `G` acting diagonally.
pub fn tensor_coinv<E: Engine>(
    engine: &E,
    y: &GroupAction<E>,
    family: &[E::Mor],
    n: &MultiIndex,
) -> Result<CoinvariantArrow<E>> {
    let (_, power) = pp_multi(engine, family, n)?;
    if *y.group != **power.group() {
        return Err(mismatch(format!("Y must carry an action of the group of {n}")));
    }
    let arrow = engine.tensor_mor(&engine.identity(&y.object), &power.arrow);
    let source = y.tensor(engine, &power.source)?;
    let target = y.tensor(engine, &power.target)?;
    let eq = EquivariantArrow::new(engine, arrow, source, target)?;
    coinvariant_arrow(engine, &eq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{Chain, ChainComplex, ChainMap};
    use crate::engine::{FinSet, FinSetMap};
    use crate::sset::{cell_inclusion, CellKind, SSet, SimplicialMap, SimplicialSet};

    fn boundary() -> SimplicialMap {
        cell_inclusion(CellKind::Boundary, 1, None).unwrap()
    }

    #[test]
    fn square_power_action() {
        let e = SSet;
        let (p, eq) = pp_power(&e, &boundary(), 2).unwrap();
        let swap = eq.target.act(1);
        // the diagonal edge is fixed, the two triangles are exchanged
        let image = p.arrow.image();
        let outside: Vec<(usize, usize)> = eq
            .target
            .object
            .all_nondegenerate()
            .map(|s| (s.base, s.id))
            .filter(|&(k, i)| !image.contains_cell(k, i))
            .collect();
        assert_eq!(outside.len(), 3);
        let fixed: Vec<_> = outside.iter().filter(|&&(k, i)| swap.image_of(k, i).id == i).collect();
        assert_eq!(fixed.len(), 1);
        assert_eq!(fixed[0].0, 1);
    }

    #[test]
    fn power_one_is_the_arrow() {
        let e = FinSet;
        let f = FinSetMap::new(2, vec![1]).unwrap();
        let (p, eq) = pp_power(&e, &f, 1).unwrap();
        assert!(e.equal_morphisms(&p.arrow, &f));
        assert!(eq.group().is_trivial());
        assert!(pp_power(&e, &f, 0).is_err());
    }

    #[test]
    fn multi_power_matches_iterated() {
        let e = FinSet;
        let v1 = FinSetMap::new(2, vec![0]).unwrap();
        let v2 = FinSetMap::new(2, vec![1]).unwrap();
        let n = MultiIndex::new(vec![2, 1]).unwrap();
        let (p, eq) = pp_multi(&e, &[v1.clone(), v2.clone()], &n).unwrap();
        assert_eq!(eq.group().order(), 2);
        let (sq, _) = crate::pp::compare_left_nested(&e, &[v1.clone(), v1], &v2).unwrap();
        assert!(sq.is_isomorphism(&e).unwrap());
        assert_eq!(e.dom(&sq.source), *p.domain());
        assert!(MultiIndex::new(vec![0, 0]).is_err());
    }

    #[test]
    fn orbit_quotients() {
        let e = SSet;
        let s2 = Arc::new(FinGroup::symmetric(2).unwrap());
        let pt = SimplicialSet::discrete(1);
        let y = GroupAction::trivial(&e, s2.clone(), pt);
        let n = MultiIndex::single(2).unwrap();
        let q = tensor_coinv(&e, &y, &[boundary()], &n).unwrap();
        // (Δ¹×Δ¹)/Σ2 has 3 vertices, 3 edges (two boundary orbits and the diagonal), 1 triangle
        assert_eq!(e.cod(&q.arrow).counts(), vec![3, 3, 1]);
        assert!(e.is_mono(&q.arrow));
    }

    #[test]
    fn free_orbit_untwists() {
        let e = SSet;
        let s2 = Arc::new(FinGroup::symmetric(2).unwrap());
        let two = SimplicialSet::discrete(2);
        let swap = crate::sset::discrete_map(&FinSetMap::new(2, vec![1, 0]).unwrap());
        let y = GroupAction::new(&e, s2, two.clone(), vec![SimplicialMap::identity(&two), swap]).unwrap();
        let n = MultiIndex::single(2).unwrap();
        let q = tensor_coinv(&e, &y, &[boundary()], &n).unwrap();
        let (p, _) = pp_power(&e, &boundary(), 2).unwrap();
        assert_eq!(e.cod(&q.arrow).counts(), e.cod(&p.arrow).counts());
        assert_eq!(e.dom(&q.arrow).counts(), p.domain().counts());
    }

    #[test]
    fn chain_power_has_sign_action() {
        let e = Chain;
        let a = ChainComplex::disk(1);
        let zero_to_a = ChainMap::zero_map(&ChainComplex::zero(), &a);
        let (_, eq) = pp_power(&e, &zero_to_a, 2).unwrap();
        assert_eq!(eq.target.object, e.tensor(&a, &a));
        let sign = crate::chain::sign_action_power(&a, 2).unwrap();
        assert!(e.equal_morphisms(eq.target.act(1), sign.act(1)));
    }
}

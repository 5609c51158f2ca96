//! The maps `m_k = Σn ·_{Σ(n-k)×Σk} (v₀^{□(n-k)} □ v₁^{□k})`.

use std::sync::Arc;

use super::{Ladder, Tuple};
use crate::engine::{induce, induce_map, Engine, FinGroup, Homomorphism, Induced};
use crate::error::{invalid, Result};
use crate::pp::{pp_multi, EquivariantArrow, MultiIndex, PPResult};

/// `m_k` with the pieces it is built from.
#[derive(Debug, Clone)]
pub struct MkMap<E: Engine> {
    pub k: MultiIndex,
    pub arrow: E::Mor,
    /// `v₀^{□(n-k)} □ v₁^{□k}` with factors ordered block by block, all
    /// `v₀` blocks first.
    pub product: PPResult<E>,
    pub equivariant: EquivariantArrow<E>,
    /// Position of each factor of `product` among the `|n|` tensor slots.
    pub slots: Vec<usize>,
    pub embedding: Homomorphism,
    /// `None` when the subgroup is the whole group and no induction happens.
    pub induced: Option<(Induced<E>, Induced<E>)>,
}

impl<E: Engine> MkMap<E> {
    /// The tuple fixed by the subgroup: `1`s then `2`s in each block.
    pub fn standard_tuple(&self, n: &MultiIndex) -> Tuple {
        n.parts()
            .iter()
            .zip(self.k.parts())
            .flat_map(|(&ni, &ki)| std::iter::repeat_n(1u8, ni - ki).chain(std::iter::repeat_n(2u8, ki)))
            .collect()
    }

    pub fn coset_count(&self) -> usize {
        self.embedding.left_cosets().len()
    }
}

/// Slot of each factor of `v₀^{□(n-k)} □ v₁^{□k}` (block-ordered, `v₀` first).
fn factor_slots(n: &MultiIndex, k: &MultiIndex) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(n.len());
    let mut acc = 0;
    for &ni in n.parts() {
        offsets.push(acc);
        acc += ni;
    }
    let mut slots = Vec::with_capacity(acc);
    for (i, (&ni, &ki)) in n.parts().iter().zip(k.parts()).enumerate() {
        slots.extend((0..ni - ki).map(|j| offsets[i] + j));
    }
    for (i, (&ni, &ki)) in n.parts().iter().zip(k.parts()).enumerate() {
        slots.extend((0..ki).map(|j| offsets[i] + ni - ki + j));
    }
    slots
}

pub fn mk_map<E: Engine>(engine: &E, ladder: &Ladder<E>, k: &MultiIndex) -> Result<MkMap<E>> {
    let n = &ladder.n;
    let rest = n.minus(k).ok_or_else(|| invalid(format!("{k} is not below {n}")))?;
    let mut family = ladder.v0.clone();
    family.extend(ladder.v1.iter().cloned());
    let mut parts = rest.parts().to_vec();
    parts.extend_from_slice(k.parts());
    let (product, equivariant) = pp_multi(engine, &family, &MultiIndex::new(parts)?)?;
    let slots = factor_slots(n, k);
    let g = Arc::new(n.group());
    let h: Arc<FinGroup> = equivariant.group().clone();
    let map = h
        .elements()
        .map(|x| {
            let p = h.perm(x);
            let mut q = vec![0; slots.len()];
            for (i, &s) in slots.iter().enumerate() {
                q[s] = slots[p[i]];
            }
            g.index_of(&q).ok_or_else(|| invalid("subgroup permutation is not blockwise"))
        })
        .collect::<Result<Vec<_>>>()?;
    let embedding = Homomorphism::new(h.clone(), g.clone(), map)?;
    let (arrow, induced) = if h.order() == g.order() {
        (equivariant.arrow.clone(), None)
    } else {
        let source = induce(engine, &embedding, &equivariant.source)?;
        let target = induce(engine, &embedding, &equivariant.target)?;
        let arrow = induce_map(engine, &source, &target, &equivariant.arrow)?;
        (arrow, Some((source, target)))
    };
    Ok(MkMap { k: k.clone(), arrow, product, equivariant, slots, embedding, induced })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{FinSet, FinSetMap, FinSetObj};

    fn ladder(n: MultiIndex) -> Ladder<FinSet> {
        let v = FinSetMap::new(1, vec![]).unwrap();
        Ladder::new(&FinSet, vec![v.clone(); n.len()], vec![FinSetMap::identity(1); n.len()], n).unwrap()
    }

    #[test]
    fn coset_expansion_of_points() {
        let e = FinSet;
        let n = MultiIndex::single(2).unwrap();
        let l = ladder(n.clone());
        let m = mk_map(&e, &l, &MultiIndex::single(1).unwrap()).unwrap();
        // a box product with an isomorphism is an isomorphism, once per coset
        assert_eq!(e.dom(&m.arrow), FinSetObj(2));
        assert_eq!(e.cod(&m.arrow), FinSetObj(2));
        assert!(e.is_iso(&m.arrow));
        assert_eq!(m.coset_count(), 2);
        assert_eq!(m.standard_tuple(&n), vec![1, 2]);
    }

    #[test]
    fn extreme_indices_skip_induction() {
        let e = FinSet;
        let n = MultiIndex::single(2).unwrap();
        let l = ladder(n);
        let top = mk_map(&e, &l, &MultiIndex::single(2).unwrap()).unwrap();
        assert!(top.induced.is_none());
        assert_eq!(e.cod(&top.arrow), FinSetObj(1));
        let bottom = mk_map(&e, &l, &MultiIndex::with_zeros(vec![0]).unwrap()).unwrap();
        assert!(bottom.induced.is_none());
        assert!(mk_map(&e, &l, &MultiIndex::single(3).unwrap()).is_err());
    }

    #[test]
    fn slots_follow_blocks() {
        let n = MultiIndex::new(vec![2, 1]).unwrap();
        let k = MultiIndex::new(vec![1, 1]).unwrap();
        assert_eq!(factor_slots(&n, &k), vec![0, 1, 2]);
        let k = MultiIndex::with_zeros(vec![1, 0]).unwrap();
        assert_eq!(factor_slots(&n, &k), vec![0, 2, 1]);
    }
}

//! Decomposition of `(v₁v₀)^{□n}` into pushouts of the maps
//! `m_k = Σn ·_{Σ(n-k)×Σk} (v₀^{□(n-k)} □ v₁^{□k})`.
//!
//! Tuples over `{0,1,2}` index tensor products `X_{t_1} ⊗ … ⊗ X_{t_N}`; a
//! downward-closed set of tuples determines an object by taking the colimit
//! of those tensor products.

pub mod certificate;
pub mod mk;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::engine::{poset_colimit, Colimit, DiagramOnPoset, Engine, Poset};
use crate::error::{invalid, mismatch, structural, Result};
use crate::pp::MultiIndex;

pub use certificate::{decompose_composite_power, decompose_kappa, verify_certificate, canonical_order, FiltrationCertificate, FiltrationStep, Mode, Realization};
pub use mk::{mk_map, MkMap};

pub type Tuple = Vec<u8>;

pub fn tuple_leq(a: &[u8], b: &[u8]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// A downward-closed set of tuples in `∏ 3^{n_i}`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DCPoset {
    pub n: MultiIndex,
    tuples: Vec<Tuple>,
}

impl DCPoset {
    pub fn new(n: MultiIndex, tuples: impl IntoIterator<Item = Tuple>) -> Result<Self> {
        let set: BTreeSet<Tuple> = tuples.into_iter().collect();
        let len = n.total();
        for t in &set {
            if t.len() != len || t.iter().any(|&x| x > 2) {
                return Err(invalid(format!("{t:?} is not a tuple over {{0,1,2}} of length {len}")));
            }
            for p in 0..len {
                if t[p] > 0 {
                    let mut lower = t.clone();
                    lower[p] -= 1;
                    if !set.contains(&lower) {
                        return Err(structural(format!("not downward closed: {t:?} without {lower:?}")));
                    }
                }
            }
        }
        Ok(Self { n, tuples: set.into_iter().collect() })
    }

    pub fn full(n: &MultiIndex) -> Self {
        Self { n: n.clone(), tuples: all_tuples(n.total()) }
    }

    /// Tuples with at least one `0`.
    pub fn with_a_zero(n: &MultiIndex) -> Self {
        Self { n: n.clone(), tuples: all_tuples(n.total()).into_iter().filter(|t| t.contains(&0)).collect() }
    }

    /// `{t : t ≤ o}`.
    pub fn down_closure(n: &MultiIndex, o: &[u8]) -> Self {
        Self { n: n.clone(), tuples: all_tuples(n.total()).into_iter().filter(|t| tuple_leq(t, o)).collect() }
    }

    pub fn tuples(&self) -> &[Tuple] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, t: &[u8]) -> bool {
        self.tuples.binary_search_by(|x| x.as_slice().cmp(t)).is_ok()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.tuples.iter().all(|t| other.contains(t))
    }

    /// Adds tuples; fails unless the result is downward closed.
    pub fn with(&self, extra: &[Tuple]) -> Result<Self> {
        Self::new(self.n.clone(), self.tuples.iter().chain(extra).cloned())
    }

    /// Removes a maximal element.
    pub fn without(&self, t: &[u8]) -> Result<Self> {
        Self::new(self.n.clone(), self.tuples.iter().filter(|x| x.as_slice() != t).cloned())
    }

    /// Closed under the blockwise permutations of `n`.
    pub fn is_symmetric(&self) -> bool {
        let group = self.n.group();
        self.tuples.iter().all(|t| group.elements().all(|g| self.contains(&permute_tuple(t, group.perm(g)))))
    }
}

fn all_tuples(len: usize) -> Vec<Tuple> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t: Tuple| {
                (0..3u8).map(move |x| {
                    let mut u = t.clone();
                    u.push(x);
                    u
                })
            })
            .collect();
    }
    out
}

/// The entry at position `p` moves to position `perm[p]`.
pub fn permute_tuple(t: &[u8], perm: &[usize]) -> Tuple {
    let mut out = vec![0; t.len()];
    for (p, &x) in t.iter().enumerate() {
        out[perm[p]] = x;
    }
    out
}

/// Number of `2`s in each block.
pub fn twos(n: &MultiIndex, t: &[u8]) -> Vec<usize> {
    let mut counts = vec![0; n.len()];
    for (p, &b) in n.blocks().iter().enumerate() {
        if t[p] == 2 {
            counts[b] += 1;
        }
    }
    counts
}

/// Tuples over `{1,2}` with `k_i` twos in block `i`, in lexicographic order.
pub fn orbit(n: &MultiIndex, k: &MultiIndex) -> Result<Vec<Tuple>> {
    if !k.leq(n) {
        return Err(invalid(format!("{k} is not below {n}")));
    }
    Ok(all_tuples(n.total())
        .into_iter()
        .filter(|t| !t.contains(&0) && twos(n, t) == k.parts())
        .collect())
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The composable families `v₀: X₀ -> X₁`, `v₁: X₁ -> X₂`, one pair per block.
#[derive(Debug, Clone)]
pub struct Ladder<E: Engine> {
    pub v0: Vec<E::Mor>,
    pub v1: Vec<E::Mor>,
    pub n: MultiIndex,
    blocks: Vec<usize>,
}

impl<E: Engine> Ladder<E> {
    pub fn new(engine: &E, v0: Vec<E::Mor>, v1: Vec<E::Mor>, n: MultiIndex) -> Result<Self> {
        if v0.len() != n.len() || v1.len() != n.len() {
            return Err(mismatch("one pair of maps per block of the multi-index is required"));
        }
        for (i, (a, b)) in v0.iter().zip(&v1).enumerate() {
            if !engine.same_object(&engine.cod(a), &engine.dom(b)) {
                return Err(mismatch(format!("v0 and v1 of block {i} are not composable")));
            }
        }
        let blocks = n.blocks();
        Ok(Self { v0, v1, n, blocks })
    }

    pub fn level(&self, engine: &E, block: usize, x: u8) -> E::Obj {
        match x {
            0 => engine.dom(&self.v0[block]),
            1 => engine.cod(&self.v0[block]),
            _ => engine.cod(&self.v1[block]),
        }
    }

    /// `X_a -> X_b` in block `block` for `a ≤ b`.
    pub fn step(&self, engine: &E, block: usize, a: u8, b: u8) -> Result<E::Mor> {
        Ok(match (a, b) {
            _ if a == b => engine.identity(&self.level(engine, block, a)),
            (0, 1) => self.v0[block].clone(),
            (1, 2) => self.v1[block].clone(),
            (0, 2) => engine.compose(&self.v1[block], &self.v0[block])?,
            _ => return Err(invalid(format!("no map from level {a} to level {b}"))),
        })
    }

    pub fn composites(&self, engine: &E) -> Result<Vec<E::Mor>> {
        self.v0.iter().zip(&self.v1).map(|(a, b)| engine.compose(b, a)).collect()
    }

    pub fn label(&self, engine: &E, t: &[u8]) -> E::Obj {
        let objs: Vec<E::Obj> = t.iter().zip(&self.blocks).map(|(&x, &b)| self.level(engine, b, x)).collect();
        engine.tensor_many(&objs)
    }

    pub fn label_map(&self, engine: &E, a: &[u8], b: &[u8]) -> Result<E::Mor> {
        let parts = a
            .iter()
            .zip(b)
            .zip(&self.blocks)
            .map(|((&x, &y), &blk)| self.step(engine, blk, x, y))
            .collect::<Result<Vec<_>>>()?;
        Ok(engine.tensor_mor_many(&parts))
    }
}

/// `Q(C)` with its cocone, legs indexed by tuple.
#[derive(Debug, Clone)]
pub struct QColimit<E: Engine> {
    pub colimit: Colimit<E>,
    pub index: BTreeMap<Tuple, usize>,
}

impl<E: Engine> QColimit<E> {
    pub fn object(&self) -> &E::Obj {
        &self.colimit.object
    }

    pub fn leg(&self, t: &[u8]) -> Result<&E::Mor> {
        self.index
            .get(t)
            .map(|&i| &self.colimit.legs[i])
            .ok_or_else(|| invalid(format!("{t:?} is not in the diagram")))
    }

    pub fn tuples(&self) -> impl Iterator<Item = &Tuple> {
        self.index.keys()
    }

    /// The map `Q(C) -> T` induced by a map out of every label.
    pub fn induce(&self, engine: &E, target: &E::Obj, mut leg: impl FnMut(&[u8]) -> Result<E::Mor>) -> Result<E::Mor> {
        let mut legs = vec![None; self.colimit.legs.len()];
        for (t, &i) in &self.index {
            legs[i] = Some(leg(t)?);
        }
        let legs: Vec<E::Mor> = legs.into_iter().map(|l| l.expect("every summand has a tuple")).collect();
        self.colimit
            .induced(engine, &legs, target)
            .ok_or_else(|| structural("label maps do not form a cocone"))
    }

    /// `Q(C) -> Q(D)` for `C ⊆ D`.
    pub fn include_into(&self, engine: &E, other: &QColimit<E>) -> Result<E::Mor> {
        self.induce(engine, other.object(), |t| other.leg(t).cloned())
    }
}

/// The colimit of the tensor labels over `c`.
pub fn q_colimit<E: Engine>(engine: &E, c: &DCPoset, ladder: &Ladder<E>) -> Result<QColimit<E>> {
    if c.n != ladder.n {
        return Err(mismatch("poset and maps are indexed by different multi-indices"));
    }
    let tuples = c.tuples();
    let poset = Poset::from_fn(tuples, |a, b| tuple_leq(a, b), |t| t.iter().map(|x| x.to_string()).collect())?;
    let objects = tuples.iter().map(|t| ladder.label(engine, t)).collect();
    let arrows = poset
        .covers()
        .into_iter()
        .map(|(a, b)| Ok(((a, b), ladder.label_map(engine, &tuples[a], &tuples[b])?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let diagram = DiagramOnPoset::new(poset, objects, arrows)?;
    let colimit = poset_colimit(engine, &diagram)?;
    let index = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    Ok(QColimit { colimit, index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{FinSet, FinSetMap, FinSetObj};

    fn point_ladder(n: MultiIndex) -> Ladder<FinSet> {
        let e = FinSet;
        let empty_to_pt = FinSetMap::new(1, vec![]).unwrap();
        let v0 = vec![empty_to_pt; n.len()];
        let v1 = vec![FinSetMap::identity(1); n.len()];
        Ladder::new(&e, v0, v1, n).unwrap()
    }

    #[test]
    fn downward_closure_is_enforced() {
        let n = MultiIndex::single(2).unwrap();
        assert!(DCPoset::new(n.clone(), vec![vec![1, 0]]).is_err());
        assert!(DCPoset::new(n.clone(), vec![vec![0, 0], vec![1, 0]]).is_ok());
        assert_eq!(DCPoset::full(&n).len(), 9);
        assert_eq!(DCPoset::with_a_zero(&n).len(), 5);
        assert!(DCPoset::with_a_zero(&n).is_symmetric());
        assert!(!DCPoset::new(n, vec![vec![0, 0], vec![1, 0]]).unwrap().is_symmetric());
    }

    #[test]
    fn orbit_sizes_are_binomial() {
        let n = MultiIndex::new(vec![3, 2]).unwrap();
        for k in n.below() {
            let o = orbit(&n, &k).unwrap();
            let expected: usize = n.parts().iter().zip(k.parts()).map(|(&a, &b)| binomial(a, b)).product();
            assert_eq!(o.len(), expected, "{k}");
            for t in &o {
                let d = DCPoset::down_closure(&n, t);
                let c = d.without(t).unwrap();
                assert_eq!(d.len() - c.len(), 1);
            }
        }
    }

    #[test]
    fn q_on_simple_posets() {
        let e = FinSet;
        let n = MultiIndex::single(2).unwrap();
        let ladder = point_ladder(n.clone());
        let origin = DCPoset::new(n.clone(), vec![vec![0, 0]]).unwrap();
        assert_eq!(*q_colimit(&e, &origin, &ladder).unwrap().object(), FinSetObj(0));
        assert_eq!(*q_colimit(&e, &DCPoset::full(&n), &ladder).unwrap().object(), FinSetObj(1));
        let punctured = DCPoset::new(n.clone(), vec![vec![0, 0], vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(*q_colimit(&e, &punctured, &ladder).unwrap().object(), FinSetObj(0));
    }
}

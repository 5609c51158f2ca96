//! The engine contract: a symmetric monoidal, finitely cocomplete category with
//! decidable morphism equality, plus the generic constructions built on it.
//!
//! Every finite colimit in this crate is reduced to one coproduct followed by
//! one coequalizer. An engine only has to provide those two primitives (and a
//! way to factor a map through the coequalizer's quotient); pushouts, colimits
//! over finite posets and group quotients are derived here.

pub mod action;
pub mod finset;
pub mod group;
pub mod poset;
pub mod serial;
pub mod union_find;

use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub use action::{coinvariants, induce, induce_map, Coinvariants, GroupAction, Induced};
pub use finset::{FinSet, FinSetMap, FinSetObj};
pub use group::{FinGroup, Homomorphism, Perm};
pub use poset::{poset_colimit, DiagramOnPoset, Poset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineTag {
    FinSet,
    SSet,
    Chain,
}

impl std::fmt::Display for EngineTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EngineTag::FinSet => "finset",
            EngineTag::SSet => "sset",
            EngineTag::Chain => "chain",
        })
    }
}

/// A concrete symmetric monoidal category with finite colimits.
///
/// Coproducts are canonical: the coproduct of a list of objects is determined
/// by the list, so `copair` can rebuild the layout from the legs alone.
pub trait Engine: Clone + Debug {
    type Obj: Clone + Debug + PartialEq;
    type Mor: Clone + Debug;

    fn tag(&self) -> EngineTag;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;

    fn initial(&self) -> Self::Obj;
    /// The unique map out of the initial object.
    fn from_initial(&self, x: &Self::Obj) -> Self::Mor;
    fn unit(&self) -> Self::Obj;

    fn coproduct(&self, xs: &[Self::Obj]) -> (Self::Obj, Vec<Self::Mor>);
    /// The map out of `coproduct(doms)` restricting to `legs[i]` on summand `i`.
    fn copair(&self, legs: &[Self::Mor], target: &Self::Obj) -> Result<Self::Mor>;
    /// Coequalizer of a parallel pair; the returned quotient map is an epimorphism.
    fn coequalizer(&self, f: &Self::Mor, g: &Self::Mor) -> Result<(Self::Obj, Self::Mor)>;
    /// Given an epimorphism `q: X -> Q` and `h: X -> T`, the unique `u` with
    /// `u ∘ q = h`, if it exists.
    fn factor_through_epi(&self, q: &Self::Mor, h: &Self::Mor) -> Option<Self::Mor>;
    /// Given a monomorphism `m: X -> Y` and `h: Z -> Y`, the unique `u` with
    /// `m ∘ u = h`, if it exists.
    fn factor_through_mono(&self, m: &Self::Mor, h: &Self::Mor) -> Option<Self::Mor>;

    fn tensor(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    /// `(x ⊗ y) ⊗ z -> x ⊗ (y ⊗ z)`.
    fn associator(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Self::Mor;
    /// `x ⊗ (y ⊗ z) -> (x ⊗ y) ⊗ z`.
    fn associator_inv(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Self::Mor;
    /// The braiding `x ⊗ y -> y ⊗ x`.
    fn symmetry(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;

    fn equal_morphisms(&self, f: &Self::Mor, g: &Self::Mor) -> bool;
    fn is_mono(&self, f: &Self::Mor) -> bool;
    fn is_iso(&self, f: &Self::Mor) -> bool;
    /// Searches for an isomorphism `x -> y`. Sound in every engine; see each
    /// engine for completeness.
    fn find_isomorphism(&self, x: &Self::Obj, y: &Self::Obj) -> Option<Self::Mor>;

    /// Short human-readable summary used in reports.
    fn describe(&self, x: &Self::Obj) -> String;

    /// The image of `f` as a set of `(dimension, cell)` pairs of its codomain,
    /// for engines whose subobjects are determined by their cells.
    fn image_cells(&self, _f: &Self::Mor) -> Option<std::collections::BTreeSet<(usize, usize)>> {
        None
    }

    // ----- derived constructions -------------------------------------------------

    fn same_object(&self, x: &Self::Obj, y: &Self::Obj) -> bool {
        x == y
    }

    /// Pushout of the span `x <- a -> y`.
    fn pushout(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Colimit<Self>>
    where
        Self: Sized,
    {
        if !self.same_object(&self.dom(f), &self.dom(g)) {
            return Err(crate::error::mismatch("pushout legs have different sources"));
        }
        let summands = vec![self.cod(f), self.cod(g)];
        let (_, inj) = self.coproduct(&summands);
        let left = self.compose(&inj[0], f)?;
        let right = self.compose(&inj[1], g)?;
        let (object, quotient) = self.coequalizer(&left, &right)?;
        let legs = inj
            .iter()
            .map(|i| self.compose(&quotient, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Colimit { object, legs, quotient, summands })
    }

    /// Left-nested tensor `((x0 ⊗ x1) ⊗ x2) ⊗ ...`; the unit for an empty list.
    fn tensor_many(&self, xs: &[Self::Obj]) -> Self::Obj {
        match xs.split_first() {
            None => self.unit(),
            Some((first, rest)) => rest
                .iter()
                .fold(first.clone(), |acc, x| self.tensor(&acc, x)),
        }
    }

    fn tensor_mor_many(&self, fs: &[Self::Mor]) -> Self::Mor {
        match fs.split_first() {
            None => self.identity(&self.unit()),
            Some((first, rest)) => rest
                .iter()
                .fold(first.clone(), |acc, f| self.tensor_mor(&acc, f)),
        }
    }

    /// Place permutation on a left-nested tensor: the factor at position `i`
    /// moves to position `perm[i]`. Built from adjacent transpositions, so any
    /// signs come from [`Engine::symmetry`].
    fn permute_factors(&self, xs: &[Self::Obj], perm: &[usize]) -> Result<Self::Mor> {
        if perm.len() != xs.len() {
            return Err(invalid("permutation degree differs from factor count"));
        }
        let mut current: Vec<Self::Obj> = xs.to_vec();
        // position -> original factor index
        let mut order: Vec<usize> = (0..xs.len()).collect();
        let mut total = self.identity(&self.tensor_many(xs));
        // bubble sort the factors by their destination
        let n = xs.len();
        for pass in 0..n {
            let mut swapped = false;
            for j in 0..n.saturating_sub(1 + pass) {
                if perm[order[j]] > perm[order[j + 1]] {
                    let step = self.adjacent_swap(&current, j)?;
                    total = self.compose(&step, &total)?;
                    current.swap(j, j + 1);
                    order.swap(j, j + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        Ok(total)
    }

    /// Swap of the factors at positions `j` and `j + 1` of a left-nested tensor.
    fn adjacent_swap(&self, xs: &[Self::Obj], j: usize) -> Result<Self::Mor> {
        let (prefix, a, b) = (&xs[..j], &xs[j], &xs[j + 1]);
        let local = if prefix.is_empty() {
            self.symmetry(a, b)
        } else {
            let p = self.tensor_many(prefix);
            let to_right = self.associator(&p, a, b);
            let swap = self.tensor_mor(&self.identity(&p), &self.symmetry(a, b));
            let back = self.associator_inv(&p, b, a);
            self.compose(&back, &self.compose(&swap, &to_right)?)?
        };
        let mut result = local;
        for x in &xs[j + 2..] {
            result = self.tensor_mor(&result, &self.identity(x));
        }
        Ok(result)
    }
}

/// A colimit realized as a quotient of the coproduct of its summands.
#[derive(Debug, Clone)]
pub struct Colimit<E: Engine> {
    pub object: E::Obj,
    /// Cocone leg for each summand.
    pub legs: Vec<E::Mor>,
    /// `coproduct(summands) -> object`, an epimorphism.
    pub quotient: E::Mor,
    pub summands: Vec<E::Obj>,
}

impl<E: Engine> Colimit<E> {
    /// The map out of the colimit induced by a cocone with the given legs.
    /// `None` if the legs do not form a cocone over the same diagram.
    pub fn induced(&self, engine: &E, legs: &[E::Mor], target: &E::Obj) -> Option<E::Mor> {
        if legs.len() != self.summands.len() {
            return None;
        }
        let h = engine.copair(legs, target).ok()?;
        engine.factor_through_epi(&self.quotient, &h)
    }
}

//! Diagrams indexed by finite posets and their colimits.

use std::collections::BTreeMap;

use super::{Colimit, Engine};
use crate::error::{mismatch, structural, Error, Result};

/// A finite poset on `0..len` given by its order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    leq: Vec<Vec<bool>>,
    names: Vec<String>,
}

impl Poset {
    /// Builds the poset from a (reflexive, antisymmetric, transitive) relation.
    pub fn new(leq: Vec<Vec<bool>>, names: Vec<String>) -> Result<Self> {
        let n = leq.len();
        if names.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(structural("order relation must be square and named"));
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(structural(format!("relation not reflexive at {}", names[a])));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(structural("relation not antisymmetric"));
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(structural("relation not transitive"));
                    }
                }
            }
        }
        Ok(Self { leq, names })
    }

    /// The poset on `elements` ordered by `le`.
    pub fn from_fn<T>(elements: &[T], le: impl Fn(&T, &T) -> bool, name: impl Fn(&T) -> String) -> Result<Self> {
        let leq = elements
            .iter()
            .map(|a| elements.iter().map(|b| le(a, b)).collect())
            .collect();
        Self::new(leq, elements.iter().map(name).collect())
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    /// Covering pairs `a ⋖ b` in lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq[a][b] && !(0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Elements in an order compatible with `≤`.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (0..n).filter(|&b| self.leq[b][a]).count());
        order
    }
}

/// A functor from a finite poset to an engine, given on covering relations.
#[derive(Debug, Clone)]
pub struct DiagramOnPoset<E: Engine> {
    pub poset: Poset,
    pub objects: Vec<E::Obj>,
    /// One morphism per covering pair.
    pub arrows: BTreeMap<(usize, usize), E::Mor>,
}

impl<E: Engine> DiagramOnPoset<E> {
    pub fn new(poset: Poset, objects: Vec<E::Obj>, arrows: BTreeMap<(usize, usize), E::Mor>) -> Result<Self> {
        if objects.len() != poset.len() {
            return Err(structural("one object per poset element is required"));
        }
        let covers = poset.covers();
        if covers.len() != arrows.len() || covers.iter().any(|c| !arrows.contains_key(c)) {
            return Err(structural("arrows must be given on exactly the covering relations"));
        }
        Ok(Self { poset, objects, arrows })
    }

    /// Checks that the composite along any two chains of covers agrees.
    ///
    /// Composites from each source are built in a linear extension; every
    /// alternative last step is compared with the first one found, which by
    /// induction covers all pairs of chains.
    pub fn check_functorial(&self, engine: &E) -> Result<()> {
        let n = self.poset.len();
        let order = self.poset.linear_extension();
        let mut preds: Vec<Vec<usize>> = vec![vec![]; n];
        for &(a, b) in self.arrows.keys() {
            preds[b].push(a);
        }
        for x in 0..n {
            let mut composite: Vec<Option<E::Mor>> = vec![None; n];
            composite[x] = Some(engine.identity(&self.objects[x]));
            for &y in &order {
                if y == x || !self.poset.leq(x, y) {
                    continue;
                }
                for &w in &preds[y] {
                    let Some(cw) = composite[w].clone() else { continue };
                    let step = engine.compose(&self.arrows[&(w, y)], &cw)?;
                    match &composite[y] {
                        None => composite[y] = Some(step),
                        Some(existing) => {
                            if !engine.equal_morphisms(existing, &step) {
                                return Err(Error::NonFunctorial {
                                    from: self.poset.name(x).to_string(),
                                    via: self.poset.name(w).to_string(),
                                    to: self.poset.name(y).to_string(),
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Colimit as the coequalizer of `⊔_{a ⋖ b} D(a) ⇉ ⊔_x D(x)`, the two maps
/// being `inj_a` and `inj_b ∘ D(a ⋖ b)`. Legs are indexed by poset element.
pub fn poset_colimit<E: Engine>(engine: &E, diagram: &DiagramOnPoset<E>) -> Result<Colimit<E>> {
    diagram.check_functorial(engine)?;
    poset_colimit_unchecked(engine, diagram)
}

pub(crate) fn poset_colimit_unchecked<E: Engine>(engine: &E, diagram: &DiagramOnPoset<E>) -> Result<Colimit<E>> {
    let (sum, inj) = engine.coproduct(&diagram.objects);
    let covers: Vec<(usize, usize)> = diagram.arrows.keys().copied().collect();
    let (left, right) = if covers.is_empty() {
        (engine.from_initial(&sum), engine.from_initial(&sum))
    } else {
        let mut l = Vec::with_capacity(covers.len());
        let mut r = Vec::with_capacity(covers.len());
        for &(a, b) in &covers {
            let arrow = &diagram.arrows[&(a, b)];
            if !engine.same_object(&engine.dom(arrow), &diagram.objects[a])
                || !engine.same_object(&engine.cod(arrow), &diagram.objects[b])
            {
                return Err(mismatch(format!(
                    "arrow {} -> {} has the wrong endpoints",
                    diagram.poset.name(a),
                    diagram.poset.name(b)
                )));
            }
            l.push(inj[a].clone());
            r.push(engine.compose(&inj[b], arrow)?);
        }
        (engine.copair(&l, &sum)?, engine.copair(&r, &sum)?)
    };
    let (object, quotient) = engine.coequalizer(&left, &right)?;
    let legs = inj
        .iter()
        .map(|i| engine.compose(&quotient, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(Colimit { object, legs, quotient, summands: diagram.objects.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::finset::{FinSet, FinSetMap, FinSetObj};

    #[test]
    fn one_point_diagram() {
        let e = FinSet;
        let p = Poset::new(vec![vec![true]], vec!["x".into()]).unwrap();
        let d = DiagramOnPoset::<FinSet>::new(p, vec![FinSetObj(3)], BTreeMap::new()).unwrap();
        let c = poset_colimit(&e, &d).unwrap();
        assert_eq!(c.object, FinSetObj(3));
        assert!(e.is_iso(&c.legs[0]));
    }

    #[test]
    fn discrete_poset_is_coproduct() {
        let e = FinSet;
        let p = Poset::new(vec![vec![true, false], vec![false, true]], vec!["a".into(), "b".into()]).unwrap();
        let d = DiagramOnPoset::<FinSet>::new(p, vec![FinSetObj(2), FinSetObj(3)], BTreeMap::new()).unwrap();
        assert_eq!(poset_colimit(&e, &d).unwrap().object, FinSetObj(5));
    }

    #[test]
    fn non_functorial_square_is_named() {
        // 0 < 1, 0 < 2, 1 < 3, 2 < 3 with disagreeing composites
        let e = FinSet;
        let rel = |a: &usize, b: &usize| a == b || *a == 0 || *b == 3;
        let p = Poset::from_fn(&[0usize, 1, 2, 3], rel, |a| format!("p{a}")).unwrap();
        let mut arrows = BTreeMap::new();
        arrows.insert((0, 1), FinSetMap::new(2, vec![0]).unwrap());
        arrows.insert((0, 2), FinSetMap::new(2, vec![0]).unwrap());
        arrows.insert((1, 3), FinSetMap::new(2, vec![0, 1]).unwrap());
        arrows.insert((2, 3), FinSetMap::new(2, vec![1, 0]).unwrap());
        let objs = vec![FinSetObj(1), FinSetObj(2), FinSetObj(2), FinSetObj(2)];
        let d = DiagramOnPoset::<FinSet>::new(p, objs, arrows).unwrap();
        match poset_colimit(&e, &d) {
            Err(Error::NonFunctorial { from, to, .. }) => {
                assert_eq!(from, "p0");
                assert_eq!(to, "p3");
            }
            other => panic!("expected a functoriality error, got {other:?}"),
        }
    }
}

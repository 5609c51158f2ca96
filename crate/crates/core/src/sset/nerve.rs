//! Truncated nerve of the indiscrete category on a finite group, with the
//! free left translation action.

use std::collections::HashMap;
use std::sync::Arc;

use super::engine::SSet;
use super::set::{SimplicialMap, SimplicialSet};
use super::simplex::Simplex;
use crate::engine::{FinGroup, GroupAction};
use crate::error::{invalid, Result};

/// Collapses runs of equal entries: the nondegenerate sequence and the
/// surjection recording which run each position belongs to.
fn collapse(seq: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut reduced: Vec<usize> = Vec::new();
    let mut surj = Vec::with_capacity(seq.len());
    for &g in seq {
        if reduced.last() != Some(&g) {
            reduced.push(g);
        }
        surj.push(reduced.len() - 1);
    }
    (reduced, surj)
}

/// The nerve of the indiscrete category on `group`, truncated at dimension
/// `top`: `k`-simplices are sequences `(g_0, …, g_k)`, nondegenerate when no
/// two consecutive entries agree. Returns the set and its cell sequences.
pub fn indiscrete_nerve(group: &FinGroup, top: usize) -> (SimplicialSet, Vec<Vec<Vec<usize>>>) {
    let n = group.order();
    let mut seqs: Vec<Vec<Vec<usize>>> = vec![(0..n).map(|g| vec![g]).collect()];
    for k in 1..=top {
        let next = seqs[k - 1]
            .iter()
            .flat_map(|s| {
                let last = *s.last().unwrap();
                (0..n).filter(move |&g| g != last).map(move |g| {
                    let mut t = s.clone();
                    t.push(g);
                    t
                })
            })
            .collect();
        seqs.push(next);
    }
    let index: Vec<HashMap<Vec<usize>, usize>> = seqs
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
        .collect();
    let cells = seqs
        .iter()
        .enumerate()
        .map(|(k, level)| {
            if k == 0 {
                return vec![Vec::new(); level.len()];
            }
            level
                .iter()
                .map(|s| {
                    (0..=k)
                        .map(|j| {
                            let mut t = s.clone();
                            t.remove(j);
                            let (reduced, surj) = collapse(&t);
                            let base = reduced.len() - 1;
                            Simplex { base, id: index[base][&reduced], surj }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let x = SimplicialSet::new(cells).expect("nerve satisfies the simplicial identities");
    (x, seqs)
}

/// `EΣn` truncated at dimension `top`, with `Σn` acting by left translation.
pub fn esigma_skeleton(n: usize, top: usize) -> Result<GroupAction<SSet>> {
    if n == 0 {
        return Err(invalid("symmetric group of degree 0"));
    }
    let group = Arc::new(FinGroup::symmetric(n)?);
    let (x, seqs) = indiscrete_nerve(&group, top);
    let index: Vec<HashMap<&Vec<usize>, usize>> = seqs
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();
    let maps = group
        .elements()
        .map(|g| {
            let images = seqs
                .iter()
                .enumerate()
                .map(|(k, level)| {
                    level
                        .iter()
                        .map(|s| {
                            let t: Vec<usize> = s.iter().map(|&h| group.mul(g, h)).collect();
                            Simplex::nondegenerate(k, index[k][&t])
                        })
                        .collect()
                })
                .collect();
            SimplicialMap::new(x.clone(), x.clone(), images)
        })
        .collect::<Result<Vec<_>>>()?;
    GroupAction::new(&SSet, group, x, maps)
}

/// Whether no non-identity element fixes a nondegenerate cell.
pub fn acts_freely(action: &GroupAction<SSet>) -> bool {
    let id = action.group.identity();
    action.group.elements().filter(|&g| g != id).all(|g| {
        action.act(g).images.iter().enumerate().all(|(k, level)| {
            level.iter().enumerate().all(|(i, s)| *s != Simplex::nondegenerate(k, i))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::coinvariants;
    use crate::sset::homology::sset_homology;

    #[test]
    fn two_cells_per_dimension() {
        let e = esigma_skeleton(2, 3).unwrap();
        assert_eq!(e.object.counts(), vec![2, 2, 2, 2]);
        assert!(acts_freely(&e));
        assert_eq!(esigma_skeleton(1, 2).unwrap().object.counts(), vec![1]);
    }

    #[test]
    fn quotient_is_projective_space() {
        let e = esigma_skeleton(2, 4).unwrap();
        let h: Vec<String> = sset_homology(&e.object, 3).unwrap().iter().map(|g| g.to_string()).collect();
        assert_eq!(h, vec!["Z", "0", "0", "0"]);
        let b = coinvariants(&SSet, &e).unwrap().object;
        let h: Vec<String> = sset_homology(&b, 3).unwrap().iter().map(|g| g.to_string()).collect();
        assert_eq!(h, vec!["Z", "Z/2", "0", "Z/2"]);
    }
}

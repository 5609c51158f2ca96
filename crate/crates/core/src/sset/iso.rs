//! Isomorphism search between finite simplicial sets.
//!
//! Cells are matched from the top dimension down; every assignment forces
//! the assignment of its faces, so only cells that are not faces of anything
//! already placed are branched on. Candidates are pruned by a local
//! signature (face degeneracy pattern, coface counts, optional marking).

use std::collections::HashMap;

use super::set::{SimplicialMap, SimplicialSet, Subobject};
use super::simplex::Simplex;

type Signature = (Vec<Vec<usize>>, Vec<usize>, bool);

fn signatures(x: &SimplicialSet, marked: Option<&Subobject>) -> Vec<Vec<Signature>> {
    let top = x.raw_cells().len();
    let mut cofaces: Vec<Vec<Vec<usize>>> = x.counts().iter().map(|&c| vec![vec![0; top]; c]).collect();
    for k in 1..top {
        for i in 0..x.count(k) {
            for f in x.cell_faces(k, i) {
                cofaces[f.base][f.id][k] += 1;
            }
        }
    }
    (0..top)
        .map(|k| {
            (0..x.count(k))
                .map(|i| {
                    let pattern = x.cell_faces(k, i).iter().map(|f| f.surj.clone()).collect();
                    let mark = marked.is_some_and(|m| m.contains_cell(k, i));
                    (pattern, cofaces[k][i].clone(), mark)
                })
                .collect()
        })
        .collect()
}

struct Search<'a> {
    x: &'a SimplicialSet,
    y: &'a SimplicialSet,
    sx: Vec<Vec<Signature>>,
    sy: Vec<Vec<Signature>>,
    forward: Vec<Vec<Option<usize>>>,
    used: Vec<Vec<bool>>,
    order: Vec<(usize, usize)>,
    candidates: HashMap<(usize, Signature), Vec<usize>>,
}

impl Search<'_> {
    /// Assigns `x -> y` and everything it forces; returns the trail for undo,
    /// or `None` (with the partial trail already undone) on conflict.
    fn assign(&mut self, k: usize, xi: usize, yi: usize) -> Option<Vec<(usize, usize)>> {
        let mut trail: Vec<(usize, usize)> = Vec::new();
        let mut stack = vec![(k, xi, yi)];
        while let Some((k, a, b)) = stack.pop() {
            match self.forward[k][a] {
                Some(existing) if existing == b => continue,
                Some(_) => {
                    self.undo(&trail);
                    return None;
                }
                None => {}
            }
            if self.used[k][b] || self.sx[k][a] != self.sy[k][b] {
                self.undo(&trail);
                return None;
            }
            self.forward[k][a] = Some(b);
            self.used[k][b] = true;
            trail.push((k, a));
            if k > 0 {
                let fa: &[Simplex] = self.x.cell_faces(k, a);
                let fb: &[Simplex] = self.y.cell_faces(k, b);
                for (p, q) in fa.iter().zip(fb) {
                    // equal degeneracy patterns are guaranteed by the signature check
                    stack.push((p.base, p.id, q.id));
                }
            }
        }
        Some(trail)
    }

    fn undo(&mut self, trail: &[(usize, usize)]) {
        for &(k, a) in trail {
            if let Some(b) = self.forward[k][a].take() {
                self.used[k][b] = false;
            }
        }
    }

    fn run(&mut self, pos: usize) -> bool {
        let Some(&(k, a)) = self.order[pos..].iter().find(|&&(k, a)| self.forward[k][a].is_none()) else {
            return true;
        };
        let next = self.order.iter().position(|&c| c == (k, a)).unwrap();
        let cands = self.candidates.get(&(k, self.sx[k][a].clone())).cloned().unwrap_or_default();
        for b in cands {
            if self.used[k][b] {
                continue;
            }
            if let Some(trail) = self.assign(k, a, b) {
                if self.run(next + 1) {
                    return true;
                }
                self.undo(&trail);
            }
        }
        false
    }
}

/// Searches for an isomorphism `x -> y`; with `marks = (A, B)` the
/// isomorphism must carry the subobject `A ⊆ x` onto `B ⊆ y`. Complete:
/// returns `None` only if no isomorphism exists.
pub fn find_sset_isomorphism(
    x: &SimplicialSet,
    y: &SimplicialSet,
    marks: Option<(&Subobject, &Subobject)>,
) -> Option<SimplicialMap> {
    if x.counts() != y.counts() {
        return None;
    }
    if let Some((a, b)) = marks {
        if a.ambient != *x || b.ambient != *y || a.counts() != b.counts() {
            return None;
        }
    }
    let sx = signatures(x, marks.map(|m| m.0));
    let sy = signatures(y, marks.map(|m| m.1));
    let mut candidates: HashMap<(usize, Signature), Vec<usize>> = HashMap::new();
    for (k, level) in sy.iter().enumerate() {
        for (i, s) in level.iter().enumerate() {
            candidates.entry((k, s.clone())).or_default().push(i);
        }
    }
    let order: Vec<(usize, usize)> = (0..x.raw_cells().len())
        .rev()
        .flat_map(|k| (0..x.count(k)).map(move |i| (k, i)))
        .collect();
    let mut search = Search {
        x,
        y,
        forward: x.counts().iter().map(|&c| vec![None; c]).collect(),
        used: y.counts().iter().map(|&c| vec![false; c]).collect(),
        sx,
        sy,
        order,
        candidates,
    };
    if !search.run(0) {
        return None;
    }
    let images = search
        .forward
        .iter()
        .enumerate()
        .map(|(k, l)| l.iter().map(|b| Simplex::nondegenerate(k, b.expect("complete assignment"))).collect())
        .collect();
    let f = SimplicialMap::new(x.clone(), y.clone(), images).ok()?;
    f.is_iso().then_some(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::cells::{generate_cell, ordered_complex, CellKind};

    #[test]
    fn relabelled_triangle() {
        let a = generate_cell(CellKind::Boundary, 2, None).unwrap();
        let b = ordered_complex(3, &[vec![2, 0], vec![2, 1], vec![0, 1]]).unwrap();
        assert!(find_sset_isomorphism(&a, &b, None).is_some());
    }

    #[test]
    fn orientation_matters() {
        let horn = generate_cell(CellKind::Horn, 2, Some(1)).unwrap();
        let lambda = generate_cell(CellKind::TwoHornLambda, 0, None).unwrap();
        assert_eq!(horn.counts(), lambda.counts());
        assert!(find_sset_isomorphism(&horn, &lambda, None).is_none());
    }

    #[test]
    fn marked_search_respects_the_subobject() {
        let d1 = generate_cell(CellKind::Simplex, 1, None).unwrap();
        let v0 = Subobject::generated_by(&d1, &[(0, 0)]);
        let v1 = Subobject::generated_by(&d1, &[(0, 1)]);
        assert!(find_sset_isomorphism(&d1, &d1, Some((&v0, &v0))).is_some());
        assert!(find_sset_isomorphism(&d1, &d1, Some((&v0, &v1))).is_none());
    }
}

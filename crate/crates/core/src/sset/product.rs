//! Cartesian products. A nondegenerate `k`-simplex of `X × Y` is a pair
//! `(σ* a, τ* b)` of `k`-simplices whose degeneracy index sets are disjoint.

use std::collections::HashMap;

use super::set::{SimplicialMap, SimplicialSet};
use super::simplex::{repeats, subsets, surjection_with_repeats, Simplex};
use crate::error::{mismatch, Result};

/// `X × Y` with its projections and the cell index needed to build maps into it.
#[derive(Debug, Clone)]
pub struct ProductStructure {
    pub left: SimplicialSet,
    pub right: SimplicialSet,
    pub object: SimplicialSet,
    pub p1: SimplicialMap,
    pub p2: SimplicialMap,
    /// `pairs[k][i]` = components of the `i`-th nondegenerate `k`-cell.
    pub pairs: Vec<Vec<(Simplex, Simplex)>>,
    index: Vec<HashMap<(Simplex, Simplex), usize>>,
}

pub fn sset_product(x: &SimplicialSet, y: &SimplicialSet) -> ProductStructure {
    let top = if x.is_empty() || y.is_empty() { None } else { Some(x.dim() + y.dim()) };
    let mut pairs: Vec<Vec<(Simplex, Simplex)>> = Vec::new();
    if let Some(top) = top {
        for k in 0..=top {
            let mut level = Vec::new();
            for p in 0..=k.min(x.dim()) {
                for a in 0..x.count(p) {
                    for q in k.saturating_sub(p)..=k.min(y.dim()) {
                        for b in 0..y.count(q) {
                            for js in subsets(k, k - p) {
                                let rest: Vec<usize> = (0..k).filter(|t| !js.contains(t)).collect();
                                for pick in subsets(rest.len(), k - q) {
                                    let jt: Vec<usize> = pick.iter().map(|&i| rest[i]).collect();
                                    level.push((
                                        Simplex { base: p, id: a, surj: surjection_with_repeats(k, &js) },
                                        Simplex { base: q, id: b, surj: surjection_with_repeats(k, &jt) },
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            pairs.push(level);
        }
    }
    let index: Vec<HashMap<(Simplex, Simplex), usize>> = pairs
        .iter()
        .map(|l| l.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect())
        .collect();
    let cells = pairs
        .iter()
        .enumerate()
        .map(|(k, level)| {
            level
                .iter()
                .map(|(a, b)| {
                    if k == 0 {
                        return Vec::new();
                    }
                    (0..=k)
                        .map(|i| normalize_pair(&index, &x.face(a, i), &y.face(b, i)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let object = SimplicialSet::new_unchecked(cells);
    let p1_images = pairs.iter().map(|l| l.iter().map(|(a, _)| a.clone()).collect()).collect();
    let p2_images = pairs.iter().map(|l| l.iter().map(|(_, b)| b.clone()).collect()).collect();
    let p1 = SimplicialMap::new_unchecked(object.clone(), x.clone(), p1_images).expect("projection shape");
    let p2 = SimplicialMap::new_unchecked(object.clone(), y.clone(), p2_images).expect("projection shape");
    ProductStructure { left: x.clone(), right: y.clone(), object, p1, p2, pairs, index }
}

/// The product simplex with components `a`, `b` (same dimension).
fn normalize_pair(index: &[HashMap<(Simplex, Simplex), usize>], a: &Simplex, b: &Simplex) -> Simplex {
    let ra = repeats(&a.surj);
    let rb = repeats(&b.surj);
    let common: Vec<usize> = ra.iter().copied().filter(|t| rb.contains(t)).collect();
    let k = a.dim();
    let rho = surjection_with_repeats(k, &common);
    // keep the first index of every ρ-fibre
    let keep: Vec<usize> = (0..=k).filter(|&t| t == 0 || !common.contains(&(t - 1))).collect();
    let a2 = Simplex { base: a.base, id: a.id, surj: keep.iter().map(|&t| a.surj[t]).collect() };
    let b2 = Simplex { base: b.base, id: b.id, surj: keep.iter().map(|&t| b.surj[t]).collect() };
    let d = keep.len() - 1;
    let id = index[d][&(a2, b2)];
    Simplex { base: d, id, surj: rho }
}

impl ProductStructure {
    /// The simplex of `X × Y` with components `a` and `b`.
    pub fn pair(&self, a: &Simplex, b: &Simplex) -> Result<Simplex> {
        if a.dim() != b.dim() {
            return Err(mismatch("product components have different dimensions"));
        }
        Ok(normalize_pair(&self.index, a, b))
    }

    /// `⟨f, g⟩: W -> X × Y`.
    pub fn pairing(&self, f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap> {
        if f.dom != g.dom || f.cod != self.left || g.cod != self.right {
            return Err(mismatch("pairing: maps do not fit the product"));
        }
        let images = f
            .images
            .iter()
            .zip(&g.images)
            .map(|(la, lb)| la.iter().zip(lb).map(|(a, b)| normalize_pair(&self.index, a, b)).collect())
            .collect();
        SimplicialMap::new_unchecked(f.dom.clone(), self.object.clone(), images)
    }

    /// Cell of `X × Y` from components, by cell indices.
    pub fn cell_of(&self, a: &Simplex, b: &Simplex) -> Option<usize> {
        self.index.get(a.dim())?.get(&(a.clone(), b.clone())).copied()
    }
}

/// `f × g` between products.
pub fn product_map(
    source: &ProductStructure,
    target: &ProductStructure,
    f: &SimplicialMap,
    g: &SimplicialMap,
) -> Result<SimplicialMap> {
    let a = source.p1.then(f)?;
    let b = source.p2.then(g)?;
    target.pairing(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::cells::{generate_cell, CellKind};

    fn cell(kind: CellKind, m: usize) -> SimplicialSet {
        generate_cell(kind, m, None).unwrap()
    }

    #[test]
    fn square_counts() {
        let d1 = cell(CellKind::Simplex, 1);
        let p = sset_product(&d1, &d1);
        assert_eq!(p.object.counts(), vec![4, 5, 2]);
        assert_eq!(p.object.check_identities_upto(3), None);
        let b = cell(CellKind::Boundary, 1);
        assert_eq!(sset_product(&b, &b).object.counts(), vec![4]);
    }

    #[test]
    fn prism_counts() {
        // strictly increasing chains in the grid [1] × [2]
        let p = sset_product(&cell(CellKind::Simplex, 1), &cell(CellKind::Simplex, 2));
        assert_eq!(p.object.counts(), vec![6, 12, 10, 3]);
        assert_eq!(p.object.euler_characteristic(), 1);
    }

    #[test]
    fn projections_and_pairing() {
        let d1 = cell(CellKind::Simplex, 1);
        let p = sset_product(&d1, &d1);
        let id = SimplicialMap::identity(&d1);
        let diag = p.pairing(&id, &id).unwrap();
        assert!(diag.is_mono());
        assert_eq!(diag.then(&p.p1).unwrap(), id);
        let back = p.pairing(&p.p1, &p.p2).unwrap();
        assert_eq!(back, SimplicialMap::identity(&p.object));
    }

    #[test]
    fn empty_factor() {
        let p = sset_product(&SimplicialSet::empty(), &cell(CellKind::Simplex, 2));
        assert!(p.object.is_empty());
    }
}

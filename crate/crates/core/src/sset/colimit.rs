//! Coproducts, coequalizers and factorization through quotient maps.

use std::collections::HashMap;

use super::set::{SimplicialMap, SimplicialSet};
use super::simplex::{compose, Simplex};
use crate::engine::union_find::UnionFind;
use crate::error::{mismatch, Result};

/// Disjoint union; cells of summand `j` follow those of summands `< j` in every dimension.
pub fn sset_coproduct(xs: &[SimplicialSet]) -> (SimplicialSet, Vec<SimplicialMap>) {
    let top = xs.iter().filter(|x| !x.is_empty()).map(|x| x.dim() + 1).max().unwrap_or(0);
    let mut offsets: Vec<Vec<usize>> = Vec::with_capacity(xs.len());
    let mut running = vec![0usize; top];
    for x in xs {
        offsets.push(running.clone());
        for (k, r) in running.iter_mut().enumerate() {
            *r += x.count(k);
        }
    }
    let mut cells: Vec<Vec<Vec<Simplex>>> = vec![Vec::new(); top];
    for (x, off) in xs.iter().zip(&offsets) {
        for (k, level) in x.raw_cells().iter().enumerate() {
            for faces in level {
                cells[k].push(
                    faces
                        .iter()
                        .map(|f| Simplex { base: f.base, id: f.id + off[f.base], surj: f.surj.clone() })
                        .collect(),
                );
            }
        }
    }
    let sum = SimplicialSet::new_unchecked(cells);
    let inj = xs
        .iter()
        .zip(&offsets)
        .map(|(x, off)| {
            let images = (0..x.raw_cells().len())
                .map(|k| (0..x.count(k)).map(|i| Simplex::nondegenerate(k, i + off[k])).collect())
                .collect();
            SimplicialMap::new_unchecked(x.clone(), sum.clone(), images).expect("injection shape")
        })
        .collect();
    (sum, inj)
}

/// The map out of the coproduct of the legs' domains.
pub fn sset_copair(legs: &[SimplicialMap], target: &SimplicialSet) -> Result<SimplicialMap> {
    if legs.iter().any(|l| &l.cod != target) {
        return Err(mismatch("copair: a leg does not land in the target"));
    }
    let doms: Vec<SimplicialSet> = legs.iter().map(|l| l.dom.clone()).collect();
    let (sum, _) = sset_coproduct(&doms);
    let mut images: Vec<Vec<Simplex>> = vec![Vec::new(); sum.raw_cells().len()];
    for leg in legs {
        for (k, level) in leg.images.iter().enumerate() {
            images[k].extend(level.iter().cloned());
        }
    }
    SimplicialMap::new_unchecked(sum, target.clone(), images)
}

/// All simplices of `y` in dimensions `0..=top` with a position index.
struct Enumeration {
    all: Vec<Vec<Simplex>>,
    pos: Vec<HashMap<Simplex, usize>>,
}

impl Enumeration {
    fn new(y: &SimplicialSet, top: usize) -> Self {
        let all: Vec<Vec<Simplex>> = (0..=top).map(|k| y.simplices(k)).collect();
        let pos = all
            .iter()
            .map(|l| l.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
            .collect();
        Self { all, pos }
    }
}

/// Coequalizer of `f, g: X ⇉ Y`, computed degreewise on all simplices of `Y`
/// up to its dimension. A class is nondegenerate iff all its members are;
/// new cells are ordered by their least member.
pub fn sset_coequalizer(f: &SimplicialMap, g: &SimplicialMap) -> Result<(SimplicialSet, SimplicialMap)> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(mismatch("coequalizer of a non-parallel pair"));
    }
    let y = &f.cod;
    if y.is_empty() {
        return Ok((SimplicialSet::empty(), SimplicialMap::identity(y)));
    }
    let x = &f.dom;
    let top = y.dim();
    let en = Enumeration::new(y, top);
    let mut labels: Vec<Vec<usize>> = Vec::with_capacity(top + 1);
    let mut class_count = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut uf = UnionFind::new(en.all[k].len());
        if !x.is_empty() {
            for s in x.simplices(k) {
                uf.union(en.pos[k][&f.apply(&s)], en.pos[k][&g.apply(&s)]);
            }
        }
        let (lab, count) = uf.classes();
        labels.push(lab);
        class_count.push(count);
    }
    // normal form of each class: (surjection, new cell)
    let mut degenerate_member: Vec<Vec<Option<usize>>> = Vec::with_capacity(top + 1);
    let mut representative: Vec<Vec<usize>> = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut dm = vec![None; class_count[k]];
        let mut rep = vec![usize::MAX; class_count[k]];
        for (i, s) in en.all[k].iter().enumerate() {
            let c = labels[k][i];
            if rep[c] == usize::MAX {
                rep[c] = i;
            }
            if s.is_degenerate() && dm[c].is_none() {
                dm[c] = Some(i);
            }
        }
        degenerate_member.push(dm);
        representative.push(rep);
    }
    let mut new_id: Vec<Vec<usize>> = Vec::with_capacity(top + 1);
    let mut normal: Vec<Vec<Simplex>> = Vec::with_capacity(top + 1);
    let mut cells: Vec<Vec<Vec<Simplex>>> = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut ids = vec![usize::MAX; class_count[k]];
        let mut nf = Vec::with_capacity(class_count[k]);
        let mut level = Vec::new();
        for c in 0..class_count[k] {
            match degenerate_member[k][c] {
                None => {
                    ids[c] = level.len();
                    let r = &en.all[k][representative[k][c]];
                    let faces = if k == 0 {
                        Vec::new()
                    } else {
                        y.cell_faces(r.base, r.id)
                            .iter()
                            .map(|face| normal[k - 1][labels[k - 1][en.pos[k - 1][face]]].clone())
                            .collect()
                    };
                    level.push(faces);
                    nf.push(Simplex::nondegenerate(k, ids[c]));
                }
                Some(m) => {
                    let s = &en.all[k][m];
                    let base_class = labels[s.base][en.pos[s.base][&Simplex::nondegenerate(s.base, s.id)]];
                    let z = &normal[s.base][base_class];
                    nf.push(Simplex { base: z.base, id: z.id, surj: compose(&z.surj, &s.surj) });
                }
            }
        }
        new_id.push(ids);
        normal.push(nf);
        cells.push(level);
    }
    let quotient = SimplicialSet::new_unchecked(cells);
    let images = (0..=top)
        .map(|k| {
            (0..y.count(k))
                .map(|i| normal[k][labels[k][en.pos[k][&Simplex::nondegenerate(k, i)]]].clone())
                .collect()
        })
        .collect();
    let q = SimplicialMap::new_unchecked(y.clone(), quotient.clone(), images)?;
    Ok((quotient, q))
}

/// The unique `u` with `u ∘ q = h`, if `q` is surjective and `h` is constant on its fibres.
pub fn sset_factor_through_epi(q: &SimplicialMap, h: &SimplicialMap) -> Option<SimplicialMap> {
    if q.dom != h.dom {
        return None;
    }
    let target = &q.cod;
    let mut images: Vec<Vec<Option<Simplex>>> = target.counts().iter().map(|&c| vec![None; c]).collect();
    for (k, level) in q.images.iter().enumerate() {
        for (i, s) in level.iter().enumerate() {
            if !s.is_degenerate() {
                let slot = &mut images[k][s.id];
                if slot.is_none() {
                    *slot = Some(h.images[k][i].clone());
                }
            }
        }
    }
    let images: Vec<Vec<Simplex>> = images
        .into_iter()
        .map(|l| l.into_iter().collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let u = SimplicialMap::new_unchecked(target.clone(), h.cod.clone(), images).ok()?;
    // u ∘ q = h on every nondegenerate cell of the domain
    for (k, level) in q.images.iter().enumerate() {
        for (i, s) in level.iter().enumerate() {
            if u.apply(s) != h.images[k][i] {
                return None;
            }
        }
    }
    // u is simplicial: faces of the chosen cells are consistent
    if u.face_violation().is_some() {
        return None;
    }
    Some(u)
}

/// The unique `u` with `m ∘ u = h` for a monomorphism `m`, if `h` lands in its image.
pub fn sset_factor_through_mono(m: &SimplicialMap, h: &SimplicialMap) -> Option<SimplicialMap> {
    if m.cod != h.cod || !m.is_mono() {
        return None;
    }
    let mut preimage = std::collections::HashMap::new();
    for (k, level) in m.images.iter().enumerate() {
        for (i, s) in level.iter().enumerate() {
            preimage.insert((s.base, s.id), Simplex::nondegenerate(k, i));
        }
    }
    let images = h
        .images
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|s| preimage.get(&(s.base, s.id)).map(|x| x.degenerate(&s.surj)))
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    let u = SimplicialMap::new(h.dom.clone(), m.dom.clone(), images).ok()?;
    (u.then(m).ok()? == *h).then_some(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Engine;
    use crate::sset::cells::{cell_inclusion, generate_cell, map_from_vertices, CellKind};
    use crate::sset::SSet;

    #[test]
    fn circle_from_collapsed_endpoints() {
        let e = SSet;
        let inc = cell_inclusion(CellKind::Boundary, 1, None).unwrap();
        let pt = generate_cell(CellKind::Simplex, 0, None).unwrap();
        let collapse = map_from_vertices(&inc.dom, &pt, &[0, 0]).unwrap();
        let po = e.pushout(&collapse, &inc).unwrap();
        assert_eq!(po.object.counts(), vec![1, 1]);
        assert!(!po.object.cell_faces(1, 0)[0].is_degenerate());
    }

    #[test]
    fn collapsing_an_edge_makes_it_degenerate() {
        let d1 = generate_cell(CellKind::Simplex, 1, None).unwrap();
        let (sum, inj) = sset_coproduct(std::slice::from_ref(&d1));
        assert_eq!(sum, d1);
        let pt = generate_cell(CellKind::Simplex, 0, None).unwrap();
        let v0 = map_from_vertices(&pt, &d1, &[0]).unwrap();
        let v1 = map_from_vertices(&pt, &d1, &[1]).unwrap();
        let (q, map) = sset_coequalizer(&v0, &v1).unwrap();
        assert_eq!(q.counts(), vec![1, 1]);
        assert!(inj[0].is_iso());
        assert!(!map.images[1][0].is_degenerate());
        // identifying the two ends of Δ^1 gives a loop, not a point
        let loop_edge = &map.images[1][0];
        assert_eq!(q.vertices(loop_edge), vec![0, 0]);
    }

    #[test]
    fn factorization_through_a_quotient() {
        let d1 = generate_cell(CellKind::Simplex, 1, None).unwrap();
        let pt = generate_cell(CellKind::Simplex, 0, None).unwrap();
        let collapse = map_from_vertices(&d1, &pt, &[0, 0]).unwrap();
        let id = SimplicialMap::identity(&d1);
        assert!(sset_factor_through_epi(&collapse, &id).is_none());
        let u = sset_factor_through_epi(&collapse, &collapse).unwrap();
        assert!(u.is_iso());
    }
}

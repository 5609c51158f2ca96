//! Explicit homotopies `H : P × X -> Y` and their verification.

use super::cells::{cell_inclusion, generate_cell, map_from_vertices, CellKind};
use super::product::sset_product;
use super::set::{SimplicialMap, SimplicialSet, Subobject};
use super::simplex::Simplex;
use crate::checkers::Verdict;
use crate::error::{invalid, mismatch, Result};

/// A homotopy parametrized by `parameter`, from `f0` (at vertex `p0`) to
/// `f1` (at vertex `p1`). Each entry `(A, B)` of `preserves` demands that
/// `H` carries `P × A` into `B`.
#[derive(Debug, Clone)]
pub struct HomotopyWitness {
    pub parameter: SimplicialSet,
    pub p0: usize,
    pub p1: usize,
    pub source: SimplicialSet,
    pub target: SimplicialSet,
    pub map: SimplicialMap,
    pub f0: SimplicialMap,
    pub f1: SimplicialMap,
    pub preserves: Vec<(Subobject, Subobject)>,
}

impl SimplicialMap {
    /// The map sending every simplex to the given vertex of `cod`.
    pub fn constant(dom: &SimplicialSet, cod: &SimplicialSet, vertex: usize) -> Result<SimplicialMap> {
        if vertex >= cod.count(0) {
            return Err(invalid(format!("vertex {vertex} out of range")));
        }
        let images = dom
            .counts()
            .iter()
            .enumerate()
            .map(|(k, &c)| vec![Simplex { base: 0, id: vertex, surj: vec![0; k + 1] }; c])
            .collect();
        SimplicialMap::new(dom.clone(), cod.clone(), images)
    }
}

/// Restriction of `H` to `{p} × X`.
pub fn endpoint(w: &HomotopyWitness, p: usize) -> Result<SimplicialMap> {
    let prod = sset_product(&w.parameter, &w.source);
    let at = SimplicialMap::constant(&w.source, &w.parameter, p)?;
    let inclusion = prod.pairing(&at, &SimplicialMap::identity(&w.source))?;
    inclusion.then(&w.map)
}

fn first_difference(f: &SimplicialMap, g: &SimplicialMap) -> Option<(usize, usize)> {
    for (k, (a, b)) in f.images.iter().zip(&g.images).enumerate() {
        if let Some(i) = a.iter().zip(b).position(|(x, y)| x != y) {
            return Some((k, i));
        }
    }
    None
}

/// Checks both endpoints and every preservation constraint.
pub fn verify_homotopy(w: &HomotopyWitness) -> Result<Verdict> {
    let prod = sset_product(&w.parameter, &w.source);
    if w.map.dom != prod.object || w.map.cod != w.target {
        return Err(mismatch("homotopy is not a map parameter × source -> target"));
    }
    for f in [&w.f0, &w.f1] {
        if f.dom != w.source || f.cod != w.target {
            return Err(mismatch("endpoint map has the wrong ends"));
        }
    }
    for (label, p, f) in [("endpoint 0", w.p0, &w.f0), ("endpoint 2", w.p1, &w.f1)] {
        let actual = endpoint(w, p)?;
        if let Some((k, i)) = first_difference(&actual, f) {
            return Ok(Verdict::new("homotopy", false).witness(
                label,
                format!("simplex {k}:{i} goes to {:?}, expected {:?}", actual.images[k][i], f.images[k][i]),
            ));
        }
    }
    for (a, b) in &w.preserves {
        if a.ambient != w.source || b.ambient != w.target {
            return Err(mismatch("preservation constraint on the wrong ambient"));
        }
        for (k, level) in prod.pairs.iter().enumerate() {
            for (i, (_, x)) in level.iter().enumerate() {
                let image = &w.map.images[k][i];
                if a.contains(x) && !b.contains(image) {
                    return Ok(Verdict::new("homotopy", false)
                        .witness("preservation", format!("product cell {k}:{i} leaves the subobject")));
                }
            }
        }
    }
    Ok(Verdict::new("homotopy", true))
}

/// Vertex rule of the horn contraction at parameter vertex `p`.
pub fn horn_contraction_rule(p: usize, i: usize, k: usize) -> usize {
    match p {
        0 => i,
        1 => k.max(i),
        _ => k,
    }
}

/// The contraction of `Δ^m` onto vertex `k`, parametrized by `Λ = 0 -> 1 <- 2`,
/// that preserves `Λ^m_k`.
pub fn build_horn_contraction(m: usize, k: usize) -> Result<HomotopyWitness> {
    build_contraction_with(m, k, horn_contraction_rule)
}

/// As [`build_horn_contraction`] with an arbitrary vertex rule `(p, i, k) ↦ j`.
pub fn build_contraction_with(m: usize, k: usize, rule: impl Fn(usize, usize, usize) -> usize) -> Result<HomotopyWitness> {
    let horn = cell_inclusion(CellKind::Horn, m, Some(k))?;
    let simplex = horn.cod.clone();
    let lambda = generate_cell(CellKind::TwoHornLambda, 0, None)?;
    let prod = sset_product(&lambda, &simplex);
    let vertex_fn: Vec<usize> = prod
        .pairs[0]
        .iter()
        .map(|(p, i)| rule(p.id, i.id, k))
        .collect();
    let map = map_from_vertices(&prod.object, &simplex, &vertex_fn)?;
    let sub = horn.image();
    Ok(HomotopyWitness {
        parameter: lambda,
        p0: 0,
        p1: 2,
        source: simplex.clone(),
        target: simplex.clone(),
        map,
        f0: SimplicialMap::identity(&simplex),
        f1: SimplicialMap::constant(&simplex, &simplex, k)?,
        preserves: vec![(sub.clone(), sub)],
    })
}

/// The constant homotopy of the identity of `x`.
pub fn constant_homotopy(x: &SimplicialSet) -> Result<HomotopyWitness> {
    let lambda = generate_cell(CellKind::TwoHornLambda, 0, None)?;
    let prod = sset_product(&lambda, x);
    Ok(HomotopyWitness {
        parameter: lambda,
        p0: 0,
        p1: 2,
        source: x.clone(),
        target: x.clone(),
        map: prod.p2.clone(),
        f0: SimplicialMap::identity(x),
        f1: SimplicialMap::identity(x),
        preserves: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_table_for_first_horn() {
        let w = build_horn_contraction(1, 0).unwrap();
        let prod = sset_product(&w.parameter, &w.source);
        let mut table: Vec<((usize, usize), usize)> = prod.pairs[0]
            .iter()
            .enumerate()
            .map(|(v, (p, i))| ((p.id, i.id), w.map.images[0][v].id))
            .collect();
        table.sort();
        let expected = vec![((0, 0), 0), ((0, 1), 1), ((1, 0), 0), ((1, 1), 1), ((2, 0), 0), ((2, 1), 0)];
        assert_eq!(table, expected);
    }

    #[test]
    fn contractions_verify() {
        for m in 1..=3 {
            for k in 0..=m {
                assert!(verify_homotopy(&build_horn_contraction(m, k).unwrap()).unwrap().pass, "({m},{k})");
            }
        }
        let x = generate_cell(CellKind::Boundary, 2, None).unwrap();
        assert!(verify_homotopy(&constant_homotopy(&x).unwrap()).unwrap().pass);
    }

    #[test]
    fn perturbed_rule_fails_at_far_endpoint() {
        // (1,i) ↦ i; the far end must then stay below i to remain simplicial
        let bad = build_contraction_with(2, 1, |p, i, k| match p {
            0 | 1 => i,
            _ => i.min(k),
        })
        .unwrap();
        let v = verify_homotopy(&bad).unwrap();
        assert!(!v.pass);
        assert!(v.detail("endpoint 2").is_some());
        // (1,i) ↦ i with (2,i) ↦ k is not even simplicial
        assert!(build_contraction_with(2, 1, |p, i, k| if p == 1 { i } else { horn_contraction_rule(p, i, k) }).is_err());
    }
}

//! Seeded generators for finite sets, simplicial sets and maps between them.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::engine::{Engine, FinSetMap};
use crate::error::Result;
use crate::pp::ArrowSquare;
use crate::sset::{generate_cell, map_from_vertices, ordered_complex, CellKind, SimplicialMap, SimplicialSet, Subobject};

/// An injection between sets of size at most `max`.
pub fn injection(rng: &mut impl Rng, max: usize) -> FinSetMap {
    let cod = rng.gen_range(0..=max);
    let dom = rng.gen_range(0..=cod);
    let mut targets: Vec<usize> = (0..cod).collect();
    targets.shuffle(rng);
    targets.truncate(dom);
    FinSetMap::new(cod, targets).expect("targets lie in range")
}

/// Any map between sets of size at most `max`; the codomain is empty only
/// when the domain is.
pub fn finset_map(rng: &mut impl Rng, max: usize) -> FinSetMap {
    let dom = rng.gen_range(0..=max);
    let cod = rng.gen_range(usize::from(dom > 0)..=max.max(1));
    let table = (0..dom).map(|_| rng.gen_range(0..cod)).collect();
    FinSetMap::new(cod, table).expect("targets lie in range")
}

/// Composable injections `X₀ -> X₁ -> X₂` with `|X₂| ≤ max`.
pub fn injection_ladder(rng: &mut impl Rng, max: usize) -> (FinSetMap, FinSetMap) {
    let v1 = injection(rng, max);
    let x1 = v1.table.len();
    let mut targets: Vec<usize> = (0..x1).collect();
    targets.shuffle(rng);
    targets.truncate(rng.gen_range(0..=x1));
    (FinSetMap::new(x1, targets).expect("targets lie in range"), v1)
}

/// A random ordered simplicial complex of dimension at most `max_dim` with at
/// most `max_cells` nondegenerate cells and at least one vertex.
pub fn complex(rng: &mut impl Rng, max_cells: usize, max_dim: usize) -> SimplicialSet {
    loop {
        let vertices = rng.gen_range(1..=4.min(max_cells.max(1)));
        let facets: Vec<Vec<usize>> = (0..rng.gen_range(0..=3))
            .map(|_| {
                let size = rng.gen_range(2..=(max_dim + 1).min(vertices).max(2));
                let mut pick: Vec<usize> = (0..vertices).collect();
                pick.shuffle(rng);
                pick.truncate(size.min(vertices));
                pick.sort_unstable();
                pick
            })
            .filter(|f| f.len() >= 2)
            .collect();
        let x = ordered_complex(vertices, &facets).expect("facets are vertex subsets");
        if x.total_cells() <= max_cells {
            return x;
        }
    }
}

fn random_subobject(rng: &mut impl Rng, x: &SimplicialSet) -> Subobject {
    let cells: Vec<(usize, usize)> = x
        .all_nondegenerate()
        .map(|s| (s.base, s.id))
        .filter(|_| rng.gen_bool(0.4))
        .collect();
    Subobject::generated_by(x, &cells)
}

/// The inclusion of a random subcomplex of `x`.
pub fn subcomplex(rng: &mut impl Rng, x: &SimplicialSet) -> SimplicialMap {
    random_subobject(rng, x).realize().1
}

/// A random monomorphism of simplicial sets with codomain of at most `max_cells` cells.
pub fn sset_mono(rng: &mut impl Rng, max_cells: usize, max_dim: usize) -> SimplicialMap {
    let x = complex(rng, max_cells, max_dim);
    subcomplex(rng, &x)
}

/// Composable monomorphisms `X₀ -> X₁ -> X₂` with `X₂` of at most `max_cells` cells.
pub fn sset_ladder(rng: &mut impl Rng, max_cells: usize, max_dim: usize) -> (SimplicialMap, SimplicialMap) {
    let x2 = complex(rng, max_cells, max_dim);
    let v1 = subcomplex(rng, &x2);
    let v0 = subcomplex(rng, &v1.dom);
    (v0, v1)
}

/// A map from a random complex to a standard simplex, given by a monotone
/// vertex map. Such maps need not be injective.
pub fn sset_map(rng: &mut impl Rng, max_cells: usize, max_dim: usize) -> Result<SimplicialMap> {
    let x = complex(rng, max_cells, max_dim);
    let m = rng.gen_range(0..=2);
    let target = generate_cell(CellKind::Simplex, m, None)?;
    let mut vertices: Vec<usize> = (0..x.count(0)).map(|_| rng.gen_range(0..=m)).collect();
    vertices.sort_unstable();
    map_from_vertices(&x, &target, &vertices)
}

/// A pushout square: `source` is the given arrow, `top` a map out of its
/// domain, the rest the pushout.
pub fn cocartesian_square<E: Engine>(engine: &E, source: E::Mor, top: E::Mor) -> Result<ArrowSquare<E>> {
    let po = engine.pushout(&source, &top)?;
    ArrowSquare::new(engine, source, po.legs[1].clone(), top, po.legs[0].clone())
}

/// A map out of the domain of `f` into a small set.
pub fn finset_map_from(rng: &mut impl Rng, dom: usize, max: usize) -> FinSetMap {
    let cod = rng.gen_range(usize::from(dom > 0)..=max.max(1));
    FinSetMap::new(cod, (0..dom).map(|_| rng.gen_range(0..cod)).collect()).expect("targets lie in range")
}

/// A map out of `x` into a standard simplex of dimension at most 2.
pub fn sset_map_from(rng: &mut impl Rng, x: &SimplicialSet) -> Result<SimplicialMap> {
    let m = rng.gen_range(0..=2);
    let target = generate_cell(CellKind::Simplex, m, None)?;
    if x.is_empty() {
        return Ok(SimplicialMap::from_empty(&target));
    }
    // monotone on every simplex because cells of ordered complexes list vertices increasingly
    let mut cut: Vec<usize> = (0..m).map(|_| rng.gen_range(0..=x.count(0))).collect();
    cut.sort_unstable();
    let vertices: Vec<usize> = (0..x.count(0)).map(|v| cut.iter().filter(|&&c| c <= v).count()).collect();
    map_from_vertices(x, &target, &vertices)
}

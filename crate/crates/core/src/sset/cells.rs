//! Standard cells and simplicial sets whose simplices are determined by
//! their vertices (ordered simplicial complexes, nerves of finite posets).

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::set::{SimplicialMap, SimplicialSet};
use super::simplex::{epi_mono, subsets, Simplex};
use crate::error::{invalid, structural, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellKind {
    /// `Δ^m`.
    Simplex,
    /// `∂Δ^m`.
    Boundary,
    /// `Λ^m_k`.
    Horn,
    /// The 2-horn `0 -> 1 <- 2` used as a homotopy parameter.
    TwoHornLambda,
}

/// Builds `Δ^m`, `∂Δ^m`, `Λ^m_k` or `Λ = (0 -> 1 <- 2)`.
pub fn generate_cell(kind: CellKind, m: usize, k: Option<usize>) -> Result<SimplicialSet> {
    match kind {
        CellKind::Simplex => ordered_complex(m + 1, &[(0..=m).collect()]),
        CellKind::Boundary => {
            if m == 0 {
                return Ok(SimplicialSet::empty());
            }
            let facets: Vec<Vec<usize>> = (0..=m).map(|i| (0..=m).filter(|&v| v != i).collect()).collect();
            ordered_complex(m + 1, &facets)
        }
        CellKind::Horn => {
            let k = k.ok_or_else(|| invalid("horn requires a face index"))?;
            if m == 0 {
                return Err(invalid("horn Λ^0_k does not exist"));
            }
            if k > m {
                return Err(invalid(format!("horn index {k} exceeds dimension {m}")));
            }
            if m == 1 {
                // Λ^1_k is the single vertex k
                return ordered_complex(1, &[]);
            }
            let facets: Vec<Vec<usize>> = (0..=m)
                .filter(|&i| i != k)
                .map(|i| (0..=m).filter(|&v| v != i).collect())
                .collect();
            ordered_complex(m + 1, &facets)
        }
        CellKind::TwoHornLambda => ordered_complex(3, &[vec![0, 1], vec![2, 1]]),
    }
}

/// The inclusion of `∂Δ^m` or `Λ^m_k` into `Δ^m` (identity for `Δ^m`).
pub fn cell_inclusion(kind: CellKind, m: usize, k: Option<usize>) -> Result<SimplicialMap> {
    if kind == CellKind::TwoHornLambda {
        return Err(invalid("Λ is not a subcomplex of a standard simplex"));
    }
    let dom = generate_cell(kind, m, k)?;
    let cod = generate_cell(CellKind::Simplex, m, None)?;
    let vertices: Vec<usize> = match (kind, m, k) {
        (CellKind::Horn, 1, Some(k)) => vec![k],
        _ => (0..dom.count(0)).collect(),
    };
    map_from_vertices(&dom, &cod, &vertices)
}

/// The simplicial set whose nondegenerate simplices are the given vertex
/// sequences and all their subsequences. Within a dimension cells are
/// ordered lexicographically by vertex sequence.
pub fn ordered_complex(n_vertices: usize, facets: &[Vec<usize>]) -> Result<SimplicialSet> {
    let mut all: BTreeSet<Vec<usize>> = (0..n_vertices).map(|v| vec![v]).collect();
    for f in facets {
        let distinct: BTreeSet<usize> = f.iter().copied().collect();
        if distinct.len() != f.len() || f.iter().any(|&v| v >= n_vertices) {
            return Err(structural(format!("facet {f:?} is not a list of distinct vertices")));
        }
        for size in 1..=f.len() {
            for pick in subsets(f.len(), size) {
                all.insert(pick.iter().map(|&i| f[i]).collect());
            }
        }
    }
    let top = all.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut levels: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top];
    for s in all {
        levels[s.len() - 1].push(s);
    }
    let index: Vec<HashMap<Vec<usize>, usize>> = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
        .collect();
    let cells = levels
        .iter()
        .enumerate()
        .map(|(k, level)| {
            level
                .iter()
                .map(|s| {
                    if k == 0 {
                        return Vec::new();
                    }
                    (0..=k)
                        .map(|i| {
                            let mut face = s.clone();
                            face.remove(i);
                            Simplex::nondegenerate(k - 1, index[k - 1][&face])
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    SimplicialSet::new(cells)
}

/// The nerve of a finite poset given by its order relation on `0..n`.
pub fn poset_nerve(leq: &[Vec<bool>]) -> Result<SimplicialSet> {
    let n = leq.len();
    let mut facets = Vec::new();
    // maximal chains suffice; enumerate all chains and let subsequences fill in
    fn extend(leq: &[Vec<bool>], chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *chain.last().unwrap();
        let mut extended = false;
        for v in 0..leq.len() {
            if v != last && leq[last][v] {
                chain.push(v);
                extend(leq, chain, out);
                chain.pop();
                extended = true;
            }
        }
        if !extended {
            out.push(chain.clone());
        }
    }
    for v in 0..n {
        extend(leq, &mut vec![v], &mut facets);
    }
    ordered_complex(n, &facets)
}

/// Table from vertex sequence to nondegenerate cell, if simplices of `x`
/// are determined by their vertices.
pub fn vertex_index(x: &SimplicialSet) -> Result<HashMap<Vec<usize>, Simplex>> {
    let mut index = HashMap::new();
    for s in x.all_nondegenerate() {
        let v = x.vertices(&s);
        if index.insert(v.clone(), s).is_some() {
            return Err(structural(format!("two cells share the vertex sequence {v:?}")));
        }
    }
    Ok(index)
}

/// The simplicial map induced by a vertex function, for a codomain whose
/// simplices are determined by their vertices. Fails if some cell's vertex
/// image does not span a simplex of the codomain.
pub fn map_from_vertices(dom: &SimplicialSet, cod: &SimplicialSet, vertex_fn: &[usize]) -> Result<SimplicialMap> {
    let index = vertex_index(cod)?;
    map_from_vertices_with(dom, cod, vertex_fn, &index)
}

pub(crate) fn map_from_vertices_with(
    dom: &SimplicialSet,
    cod: &SimplicialSet,
    vertex_fn: &[usize],
    index: &HashMap<Vec<usize>, Simplex>,
) -> Result<SimplicialMap> {
    if vertex_fn.len() != dom.count(0) {
        return Err(invalid("vertex function must be defined on every vertex"));
    }
    let images = (0..dom.raw_cells().len())
        .map(|k| {
            dom.nondegenerate(k)
                .map(|s| {
                    let image: Vec<usize> = dom.vertices(&s).iter().map(|&v| vertex_fn[v]).collect();
                    let (spanned, tau) = epi_mono(&image);
                    let target = index
                        .get(&spanned)
                        .ok_or_else(|| structural(format!("vertices {image:?} do not span a simplex")))?;
                    Ok(target.degenerate(&tau))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::new(dom.clone(), cod.clone(), images)
}

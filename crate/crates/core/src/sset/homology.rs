//! Normalized chains and homology of simplicial sets.

use num_bigint::BigInt;

use super::set::{SimplicialMap, SimplicialSet};
use crate::chain::{chain_is_homology_iso, homology_range, mapping_cone, ChainComplex, ChainMap, FPAbelianGroup, IntMatrix};
use crate::checkers::{Verdict, HOMOLOGY_SURROGATE};
use crate::error::{invalid, Result};

/// Free on the nondegenerate simplices; `d = Σ (-1)^j d_j` with degenerate
/// faces dropped.
pub fn normalized_chains(x: &SimplicialSet) -> ChainComplex {
    if x.is_empty() {
        return ChainComplex::zero();
    }
    let counts = x.counts();
    let diffs = (1..counts.len())
        .map(|k| {
            let mut m = IntMatrix::zeros(counts[k - 1], counts[k]);
            for i in 0..counts[k] {
                for (j, f) in x.cell_faces(k, i).iter().enumerate() {
                    if !f.is_degenerate() {
                        let s = if j % 2 == 0 { 1 } else { -1 };
                        m.add_to(f.id, i, &BigInt::from(s));
                    }
                }
            }
            m
        })
        .collect();
    ChainComplex::free(0, &counts, diffs).expect("normalized chains form a complex")
}

/// The induced map on normalized chains.
pub fn chain_map_of(f: &SimplicialMap) -> ChainMap {
    let dom = normalized_chains(&f.dom);
    let cod = normalized_chains(&f.cod);
    ChainMap::from_fn(&dom, &cod, |k| {
        let k = k as usize;
        let mut m = IntMatrix::zeros(f.cod.count(k), f.dom.count(k));
        for (i, s) in f.images.get(k).map(|v| v.as_slice()).unwrap_or(&[]).iter().enumerate() {
            if !s.is_degenerate() {
                m.set(s.id, i, BigInt::from(1));
            }
        }
        m
    })
    .expect("simplicial maps induce chain maps")
}

/// `H_0 … H_upto` of the normalized chains.
pub fn sset_homology(x: &SimplicialSet, upto: usize) -> Result<Vec<FPAbelianGroup>> {
    let bound = if x.is_empty() { 0 } else { x.dim() + 1 };
    if upto > bound {
        return Err(invalid(format!("homology through degree {upto} exceeds dimension bound + 1 = {bound}")));
    }
    homology_range(&normalized_chains(x), 0, upto as i64)
}

pub fn homology_table(groups: &[FPAbelianGroup]) -> String {
    let parts: Vec<String> = groups.iter().map(|g| g.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Whether `f` induces isomorphisms on `H_k` for `k < upto` and a surjection
/// on `H_upto`, decided by acyclicity of the mapping cone through `upto`.
pub fn is_homology_iso(f: &SimplicialMap, upto: usize) -> Result<Verdict> {
    let cf = chain_map_of(f);
    let pass = chain_is_homology_iso(&cf, upto as i64)?;
    let mut v = Verdict::new("homology isomorphism", pass).flag(HOMOLOGY_SURROGATE);
    let h_dom = homology_range(&cf.dom, 0, upto as i64)?;
    let h_cod = homology_range(&cf.cod, 0, upto as i64)?;
    v = v.witness("H(source)", homology_table(&h_dom)).witness("H(target)", homology_table(&h_cod));
    if !pass {
        let cone = mapping_cone(&cf)?;
        let h = homology_range(&cone, cone.lo(), upto as i64)?;
        if let Some((i, g)) = h.iter().enumerate().find(|(_, g)| !g.is_trivial()) {
            v = v.witness("nonzero cone homology", format!("degree {}: {g}", cone.lo() + i as i64));
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::cells::{cell_inclusion, generate_cell, CellKind};

    fn table(x: &SimplicialSet, upto: usize) -> Vec<String> {
        sset_homology(x, upto).unwrap().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn interval_differential() {
        let c = normalized_chains(&generate_cell(CellKind::Simplex, 1, None).unwrap());
        assert_eq!(c.diff(1), IntMatrix::from_rows(&[vec![-1], vec![1]]));
    }

    #[test]
    fn standard_cells() {
        assert_eq!(table(&generate_cell(CellKind::Simplex, 3, None).unwrap(), 3), vec!["Z", "0", "0", "0"]);
        assert_eq!(table(&generate_cell(CellKind::Boundary, 2, None).unwrap(), 2), vec!["Z", "Z", "0"]);
        assert!(sset_homology(&generate_cell(CellKind::Simplex, 0, None).unwrap(), 5).is_err());
    }

    #[test]
    fn homology_isomorphisms() {
        let horn = cell_inclusion(CellKind::Horn, 2, Some(1)).unwrap();
        assert!(is_homology_iso(&horn, 3).unwrap().pass);
        let boundary = cell_inclusion(CellKind::Boundary, 2, None).unwrap();
        let v = is_homology_iso(&boundary, 3).unwrap();
        assert!(!v.pass);
        assert!(v.flags.contains(&HOMOLOGY_SURROGATE.to_string()));
        assert!(v.detail("nonzero cone homology").is_some());
    }
}

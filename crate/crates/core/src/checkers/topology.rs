//! Homology of `BΣn` skeleta and strict versus homotopy pushouts.

use super::verdict::Verdict;
use crate::chain::{homology_range, FPAbelianGroup};
use crate::engine::{coinvariants, Engine};
use crate::error::{Error, Result};
use crate::sset::homology::homology_table;
use crate::sset::{esigma_skeleton, generate_cell, normalized_chains, sset_product, CellKind, SSet, SimplicialMap, SimplicialSet};

/// `H_0 … H_upto` of the normalized chains, with no dimension bound.
pub fn homology_through(x: &SimplicialSet, upto: usize) -> Result<Vec<FPAbelianGroup>> {
    homology_range(&normalized_chains(x), 0, upto as i64)
}

/// Homology of `(EΣn)_{Σn}` truncated at dimension `top`, through degree `upto ≤ top - 1`.
pub fn bsigma_homology(n: usize, top: usize, upto: usize) -> Result<Vec<FPAbelianGroup>> {
    if upto + 1 > top {
        return Err(Error::Precondition(format!(
            "degree {upto} is not below the truncation {top}; the top degree is not yet stable"
        )));
    }
    let action = esigma_skeleton(n, top)?;
    let quotient = coinvariants(&SSet, &action)?;
    homology_through(&quotient.object, upto)
}

/// `X ⊔_{A×0} A×Δ¹ ⊔_{A×1} Y` for the span `X <- A -> Y`.
pub fn double_mapping_cylinder(f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialSet> {
    let e = SSet;
    let a = &f.dom;
    let interval = generate_cell(CellKind::Simplex, 1, None)?;
    let cyl = sset_product(a, &interval);
    let id = SimplicialMap::identity(a);
    let ends = [0, 1]
        .iter()
        .map(|&v| cyl.pairing(&id, &SimplicialMap::constant(a, &interval, v)?))
        .collect::<Result<Vec<_>>>()?;
    let glue = e.copair(&ends, &cyl.object)?;
    let (xy, inj) = e.coproduct(&[f.cod.clone(), g.cod.clone()]);
    let arms = e.copair(&[f.then(&inj[0])?, g.then(&inj[1])?], &xy)?;
    Ok(e.pushout(&glue, &arms)?.object)
}

/// Compares the homology of the strict pushout of `X <- A -> Y` with that of
/// the double mapping cylinder through degree `upto`.
pub fn strict_vs_homotopy_pushout(f: &SimplicialMap, g: &SimplicialMap, upto: usize) -> Result<Verdict> {
    let strict = SSet.pushout(f, g)?.object;
    let homotopy = double_mapping_cylinder(f, g)?;
    let hs = homology_through(&strict, upto)?;
    let hh = homology_through(&homotopy, upto)?;
    let agree = hs.len() == hh.len() && hs.iter().zip(&hh).all(|(a, b)| a.isomorphic(b));
    let mut v = Verdict::new("strict pushout is a homotopy pushout", agree)
        .witness("strict", homology_table(&hs))
        .witness("homotopy", homology_table(&hh));
    if let Some(k) = hs.iter().zip(&hh).position(|(a, b)| !a.isomorphic(b)) {
        v = v.witness("first difference", format!("degree {k}: {} vs {}", hs[k], hh[k]));
    }
    Ok(v)
}

//! Finite sets with the cartesian monoidal structure: the brute-force oracle
//! engine. Elements of a set of size `n` are `0..n`; the pair `(x, y)` of
//! `X × Y` is element `x * |Y| + y`, which makes the associator the identity
//! table.

use serde::{Deserialize, Serialize};

use super::union_find::UnionFind;
use super::{Engine, EngineTag};
use crate::error::{mismatch, structural, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinSetObj(pub usize);

impl FinSetObj {
    pub fn size(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinSetMap {
    pub dom: usize,
    pub cod: usize,
    pub table: Vec<usize>,
}

impl FinSetMap {
    pub fn new(cod: usize, table: Vec<usize>) -> Result<Self> {
        if let Some(bad) = table.iter().find(|&&t| t >= cod) {
            return Err(structural(format!("image {bad} out of range for codomain of size {cod}")));
        }
        Ok(Self { dom: table.len(), cod, table })
    }

    pub fn identity(n: usize) -> Self {
        Self { dom: n, cod: n, table: (0..n).collect() }
    }

    /// The inclusion of `0..dom` as the first `dom` elements of `0..cod`.
    pub fn inclusion(dom: usize, cod: usize) -> Self {
        assert!(dom <= cod);
        Self { dom, cod, table: (0..dom).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.table.iter().all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    pub fn is_bijective(&self) -> bool {
        self.dom == self.cod && self.is_injective()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut img: Vec<usize> = self.table.clone();
        img.sort_unstable();
        img.dedup();
        img
    }
}

/// Cartesian product with its two projections.
pub fn finset_product(x: FinSetObj, y: FinSetObj) -> (FinSetObj, FinSetMap, FinSetMap) {
    let n = x.0 * y.0;
    let p1 = FinSetMap { dom: n, cod: x.0, table: (0..n).map(|i| i / y.0).collect() };
    let p2 = FinSetMap { dom: n, cod: y.0, table: (0..n).map(|i| i % y.0).collect() };
    (FinSetObj(n), p1, p2)
}

pub fn finset_is_mono(f: &FinSetMap) -> bool {
    f.is_injective()
}

pub fn finset_is_iso(f: &FinSetMap) -> bool {
    f.is_bijective()
}

#[derive(Debug, Clone, Copy, Default)]
pub struct FinSet;

impl Engine for FinSet {
    type Obj = FinSetObj;
    type Mor = FinSetMap;

    fn tag(&self) -> EngineTag {
        EngineTag::FinSet
    }

    fn dom(&self, f: &FinSetMap) -> FinSetObj {
        FinSetObj(f.dom)
    }

    fn cod(&self, f: &FinSetMap) -> FinSetObj {
        FinSetObj(f.cod)
    }

    fn identity(&self, x: &FinSetObj) -> FinSetMap {
        FinSetMap::identity(x.0)
    }

    fn compose(&self, g: &FinSetMap, f: &FinSetMap) -> Result<FinSetMap> {
        if f.cod != g.dom {
            return Err(mismatch(format!("compose: codomain {} vs domain {}", f.cod, g.dom)));
        }
        Ok(FinSetMap { dom: f.dom, cod: g.cod, table: f.table.iter().map(|&x| g.table[x]).collect() })
    }

    fn initial(&self) -> FinSetObj {
        FinSetObj(0)
    }

    fn from_initial(&self, x: &FinSetObj) -> FinSetMap {
        FinSetMap { dom: 0, cod: x.0, table: vec![] }
    }

    fn unit(&self) -> FinSetObj {
        FinSetObj(1)
    }

    fn coproduct(&self, xs: &[FinSetObj]) -> (FinSetObj, Vec<FinSetMap>) {
        let total: usize = xs.iter().map(|x| x.0).sum();
        let mut offset = 0;
        let inj = xs
            .iter()
            .map(|x| {
                let m = FinSetMap { dom: x.0, cod: total, table: (offset..offset + x.0).collect() };
                offset += x.0;
                m
            })
            .collect();
        (FinSetObj(total), inj)
    }

    fn copair(&self, legs: &[FinSetMap], target: &FinSetObj) -> Result<FinSetMap> {
        let mut table = Vec::new();
        for leg in legs {
            if leg.cod != target.0 {
                return Err(mismatch("copair: leg codomain differs from target"));
            }
            table.extend_from_slice(&leg.table);
        }
        Ok(FinSetMap { dom: table.len(), cod: target.0, table })
    }

    fn coequalizer(&self, f: &FinSetMap, g: &FinSetMap) -> Result<(FinSetObj, FinSetMap)> {
        if f.dom != g.dom || f.cod != g.cod {
            return Err(mismatch("coequalizer of a non-parallel pair"));
        }
        let mut uf = UnionFind::new(f.cod);
        for x in 0..f.dom {
            uf.union(f.table[x], g.table[x]);
        }
        let (labels, count) = uf.classes();
        Ok((FinSetObj(count), FinSetMap { dom: f.cod, cod: count, table: labels }))
    }

    fn factor_through_epi(&self, q: &FinSetMap, h: &FinSetMap) -> Option<FinSetMap> {
        if q.dom != h.dom {
            return None;
        }
        let mut table = vec![usize::MAX; q.cod];
        for x in 0..q.dom {
            let slot = &mut table[q.table[x]];
            if *slot == usize::MAX {
                *slot = h.table[x];
            } else if *slot != h.table[x] {
                return None;
            }
        }
        if table.contains(&usize::MAX) {
            return None;
        }
        Some(FinSetMap { dom: q.cod, cod: h.cod, table })
    }

    fn factor_through_mono(&self, m: &FinSetMap, h: &FinSetMap) -> Option<FinSetMap> {
        if m.cod != h.cod || !m.is_injective() {
            return None;
        }
        let mut preimage = vec![None; m.cod];
        for (x, &y) in m.table.iter().enumerate() {
            preimage[y] = Some(x);
        }
        let table = h.table.iter().map(|&y| preimage[y]).collect::<Option<Vec<_>>>()?;
        Some(FinSetMap { dom: h.dom, cod: m.dom, table })
    }

    fn image_cells(&self, f: &FinSetMap) -> Option<std::collections::BTreeSet<(usize, usize)>> {
        Some(f.table.iter().map(|&y| (0, y)).collect())
    }

    fn tensor(&self, x: &FinSetObj, y: &FinSetObj) -> FinSetObj {
        FinSetObj(x.0 * y.0)
    }

    fn tensor_mor(&self, f: &FinSetMap, g: &FinSetMap) -> FinSetMap {
        let mut table = Vec::with_capacity(f.dom * g.dom);
        for a in 0..f.dom {
            for b in 0..g.dom {
                table.push(f.table[a] * g.cod + g.table[b]);
            }
        }
        FinSetMap { dom: f.dom * g.dom, cod: f.cod * g.cod, table }
    }

    fn associator(&self, x: &FinSetObj, y: &FinSetObj, z: &FinSetObj) -> FinSetMap {
        FinSetMap::identity(x.0 * y.0 * z.0)
    }

    fn associator_inv(&self, x: &FinSetObj, y: &FinSetObj, z: &FinSetObj) -> FinSetMap {
        FinSetMap::identity(x.0 * y.0 * z.0)
    }

    fn symmetry(&self, x: &FinSetObj, y: &FinSetObj) -> FinSetMap {
        let n = x.0 * y.0;
        let table = (0..n).map(|i| (i % y.0) * x.0 + i / y.0).collect();
        FinSetMap { dom: n, cod: n, table }
    }

    fn equal_morphisms(&self, f: &FinSetMap, g: &FinSetMap) -> bool {
        f == g
    }

    fn is_mono(&self, f: &FinSetMap) -> bool {
        f.is_injective()
    }

    fn is_iso(&self, f: &FinSetMap) -> bool {
        f.is_bijective()
    }

    fn find_isomorphism(&self, x: &FinSetObj, y: &FinSetObj) -> Option<FinSetMap> {
        (x == y).then(|| FinSetMap::identity(x.0))
    }

    fn describe(&self, x: &FinSetObj) -> String {
        format!("finset[{}]", x.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_sizes() {
        assert_eq!(finset_product(FinSetObj(0), FinSetObj(4)).0, FinSetObj(0));
        assert_eq!(finset_product(FinSetObj(2), FinSetObj(3)).0, FinSetObj(6));
        let (p, p1, p2) = finset_product(FinSetObj(1), FinSetObj(3));
        assert_eq!(p, FinSetObj(3));
        assert!(finset_is_iso(&p2));
        assert_eq!(p1.table, vec![0, 0, 0]);
    }

    #[test]
    fn product_pairing_is_bijective() {
        let (p, p1, p2) = finset_product(FinSetObj(2), FinSetObj(3));
        let mut seen = std::collections::HashSet::new();
        for e in 0..p.0 {
            assert!(seen.insert((p1.apply(e), p2.apply(e))));
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn mono_and_iso() {
        assert!(finset_is_mono(&FinSetMap::identity(3)) && finset_is_iso(&FinSetMap::identity(3)));
        let constant = FinSetMap::new(1, vec![0, 0]).unwrap();
        assert!(!finset_is_mono(&constant));
        let inc = FinSetMap::new(2, vec![0]).unwrap();
        assert!(finset_is_mono(&inc) && !finset_is_iso(&inc));
    }

    #[test]
    fn symmetry_is_involutive() {
        let e = FinSet;
        let (x, y) = (FinSetObj(2), FinSetObj(3));
        let s = e.compose(&e.symmetry(&y, &x), &e.symmetry(&x, &y)).unwrap();
        assert!(e.equal_morphisms(&s, &FinSetMap::identity(6)));
    }

    #[test]
    fn coequalizer_merges_orbits() {
        let e = FinSet;
        let f = FinSetMap::new(4, vec![0, 2]).unwrap();
        let g = FinSetMap::new(4, vec![1, 3]).unwrap();
        let (q, map) = e.coequalizer(&f, &g).unwrap();
        assert_eq!(q, FinSetObj(2));
        assert_eq!(map.table, vec![0, 0, 1, 1]);
    }
}

use super::cells::{generate_cell, CellKind};
use super::colimit::{sset_coequalizer, sset_coproduct, sset_copair, sset_factor_through_epi, sset_factor_through_mono};
use super::iso::find_sset_isomorphism;
use super::product::{product_map, sset_product};
use super::set::{SimplicialMap, SimplicialSet};
use crate::engine::{Engine, EngineTag, FinSetMap, FinSetObj};
use crate::error::Result;

/// Simplicial sets with the cartesian monoidal structure.
#[derive(Debug, Clone, Copy, Default)]
pub struct SSet;

impl Engine for SSet {
    type Obj = SimplicialSet;
    type Mor = SimplicialMap;

    fn tag(&self) -> EngineTag {
        EngineTag::SSet
    }

    fn dom(&self, f: &SimplicialMap) -> SimplicialSet {
        f.dom.clone()
    }

    fn cod(&self, f: &SimplicialMap) -> SimplicialSet {
        f.cod.clone()
    }

    fn identity(&self, x: &SimplicialSet) -> SimplicialMap {
        SimplicialMap::identity(x)
    }

    fn compose(&self, g: &SimplicialMap, f: &SimplicialMap) -> Result<SimplicialMap> {
        f.then(g)
    }

    fn initial(&self) -> SimplicialSet {
        SimplicialSet::empty()
    }

    fn from_initial(&self, x: &SimplicialSet) -> SimplicialMap {
        SimplicialMap::from_empty(x)
    }

    fn unit(&self) -> SimplicialSet {
        generate_cell(CellKind::Simplex, 0, None).expect("Δ^0")
    }

    fn coproduct(&self, xs: &[SimplicialSet]) -> (SimplicialSet, Vec<SimplicialMap>) {
        sset_coproduct(xs)
    }

    fn copair(&self, legs: &[SimplicialMap], target: &SimplicialSet) -> Result<SimplicialMap> {
        sset_copair(legs, target)
    }

    fn coequalizer(&self, f: &SimplicialMap, g: &SimplicialMap) -> Result<(SimplicialSet, SimplicialMap)> {
        sset_coequalizer(f, g)
    }

    fn factor_through_epi(&self, q: &SimplicialMap, h: &SimplicialMap) -> Option<SimplicialMap> {
        sset_factor_through_epi(q, h)
    }

    fn factor_through_mono(&self, m: &SimplicialMap, h: &SimplicialMap) -> Option<SimplicialMap> {
        sset_factor_through_mono(m, h)
    }

    fn image_cells(&self, f: &SimplicialMap) -> Option<std::collections::BTreeSet<(usize, usize)>> {
        let image = f.image();
        Some(image.members().into_iter().enumerate().flat_map(|(k, ids)| ids.into_iter().map(move |i| (k, i))).collect())
    }

    fn tensor(&self, x: &SimplicialSet, y: &SimplicialSet) -> SimplicialSet {
        sset_product(x, y).object
    }

    fn tensor_mor(&self, f: &SimplicialMap, g: &SimplicialMap) -> SimplicialMap {
        let source = sset_product(&f.dom, &g.dom);
        let target = sset_product(&f.cod, &g.cod);
        product_map(&source, &target, f, g).expect("product of maps")
    }

    fn associator(&self, x: &SimplicialSet, y: &SimplicialSet, z: &SimplicialSet) -> SimplicialMap {
        let xy = sset_product(x, y);
        let left = sset_product(&xy.object, z);
        let yz = sset_product(y, z);
        let right = sset_product(x, &yz.object);
        let to_x = left.p1.then(&xy.p1).expect("projection");
        let to_y = left.p1.then(&xy.p2).expect("projection");
        let inner = yz.pairing(&to_y, &left.p2).expect("pairing");
        right.pairing(&to_x, &inner).expect("pairing")
    }

    fn associator_inv(&self, x: &SimplicialSet, y: &SimplicialSet, z: &SimplicialSet) -> SimplicialMap {
        let yz = sset_product(y, z);
        let right = sset_product(x, &yz.object);
        let xy = sset_product(x, y);
        let left = sset_product(&xy.object, z);
        let to_y = right.p2.then(&yz.p1).expect("projection");
        let to_z = right.p2.then(&yz.p2).expect("projection");
        let inner = xy.pairing(&right.p1, &to_y).expect("pairing");
        left.pairing(&inner, &to_z).expect("pairing")
    }

    fn symmetry(&self, x: &SimplicialSet, y: &SimplicialSet) -> SimplicialMap {
        let xy = sset_product(x, y);
        let yx = sset_product(y, x);
        yx.pairing(&xy.p2, &xy.p1).expect("pairing")
    }

    fn equal_morphisms(&self, f: &SimplicialMap, g: &SimplicialMap) -> bool {
        f == g
    }

    fn is_mono(&self, f: &SimplicialMap) -> bool {
        f.is_mono()
    }

    fn is_iso(&self, f: &SimplicialMap) -> bool {
        f.is_iso()
    }

    fn find_isomorphism(&self, x: &SimplicialSet, y: &SimplicialSet) -> Option<SimplicialMap> {
        find_sset_isomorphism(x, y, None)
    }

    fn describe(&self, x: &SimplicialSet) -> String {
        format!("sset{:?}", x.counts())
    }
}

/// Finite sets as discrete simplicial sets.
pub fn discrete_object(x: FinSetObj) -> SimplicialSet {
    SimplicialSet::discrete(x.0)
}

pub fn discrete_map(f: &FinSetMap) -> SimplicialMap {
    let dom = SimplicialSet::discrete(f.dom);
    let cod = SimplicialSet::discrete(f.cod);
    let images = if f.dom == 0 {
        Vec::new()
    } else {
        vec![f.table.iter().map(|&t| super::Simplex::nondegenerate(0, t)).collect()]
    };
    SimplicialMap::new(dom, cod, images).expect("discrete map")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::cells::cell_inclusion;

    #[test]
    fn symmetry_is_involutive() {
        let e = SSet;
        let x = generate_cell(CellKind::Simplex, 1, None).unwrap();
        let y = generate_cell(CellKind::Horn, 2, Some(0)).unwrap();
        let s = e.compose(&e.symmetry(&y, &x), &e.symmetry(&x, &y)).unwrap();
        assert!(e.equal_morphisms(&s, &e.identity(&e.tensor(&x, &y))));
    }

    #[test]
    fn associator_is_inverse_pair() {
        let e = SSet;
        let x = generate_cell(CellKind::Simplex, 1, None).unwrap();
        let y = generate_cell(CellKind::Boundary, 1, None).unwrap();
        let z = generate_cell(CellKind::Simplex, 1, None).unwrap();
        let a = e.associator(&x, &y, &z);
        let b = e.associator_inv(&x, &y, &z);
        assert!(a.is_iso());
        assert_eq!(e.compose(&b, &a).unwrap(), e.identity(&a.dom));
    }

    #[test]
    fn unit_product_is_isomorphic() {
        let e = SSet;
        let x = generate_cell(CellKind::Horn, 2, Some(2)).unwrap();
        let px = e.tensor(&e.unit(), &x);
        assert!(e.find_isomorphism(&px, &x).is_some());
    }

    #[test]
    fn diagonal_is_mono() {
        let e = SSet;
        let d1 = generate_cell(CellKind::Simplex, 1, None).unwrap();
        let p = sset_product(&d1, &d1);
        let id = e.identity(&d1);
        assert!(e.is_mono(&p.pairing(&id, &id).unwrap()));
        assert!(e.is_mono(&cell_inclusion(CellKind::Horn, 2, Some(1)).unwrap()));
    }
}

//! Finitely generated simplicial sets, simplicial maps and subobjects.

use std::fmt;
use std::sync::Arc;

use super::simplex::{coface, epi_mono, compose, surjections, Simplex};
use crate::error::{mismatch, structural, Result};

#[derive(PartialEq, Eq, Hash)]
struct Inner {
    /// `cells[k][i]` lists the `k + 1` faces of the `i`-th nondegenerate `k`-cell.
    cells: Vec<Vec<Vec<Simplex>>>,
}

/// A simplicial set with finitely many nondegenerate simplices. Cheap to clone.
#[derive(Clone)]
pub struct SimplicialSet {
    inner: Arc<Inner>,
}

impl PartialEq for SimplicialSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for SimplicialSet {}

impl std::hash::Hash for SimplicialSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.hash(state)
    }
}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialSet{:?}", self.counts())
    }
}

impl SimplicialSet {
    /// Validates face data and the simplicial identities on every cell.
    pub fn new(cells: Vec<Vec<Vec<Simplex>>>) -> Result<Self> {
        let x = Self::new_unchecked(cells);
        x.validate()?;
        Ok(x)
    }

    pub(crate) fn new_unchecked(mut cells: Vec<Vec<Vec<Simplex>>>) -> Self {
        while cells.last().is_some_and(|c| c.is_empty()) {
            cells.pop();
        }
        Self { inner: Arc::new(Inner { cells }) }
    }

    pub fn empty() -> Self {
        Self::new_unchecked(Vec::new())
    }

    /// `n` isolated vertices.
    pub fn discrete(n: usize) -> Self {
        Self::new_unchecked(vec![vec![Vec::new(); n]])
    }

    fn validate(&self) -> Result<()> {
        let cells = &self.inner.cells;
        for (k, level) in cells.iter().enumerate() {
            for (i, faces) in level.iter().enumerate() {
                let expected = if k == 0 { 0 } else { k + 1 };
                if faces.len() != expected {
                    return Err(structural(format!("cell {k}:{i} has {} faces, expected {expected}", faces.len())));
                }
                for (j, s) in faces.iter().enumerate() {
                    let ok = s.dim() + 1 == k
                        && s.base < k
                        && s.id < self.count(s.base)
                        && s.surj.first() == Some(&0)
                        && s.surj.last() == Some(&s.base)
                        && s.surj.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1);
                    if !ok {
                        return Err(structural(format!("face {j} of cell {k}:{i} is malformed: {s:?}")));
                    }
                }
            }
        }
        for k in 2..cells.len() {
            for id in 0..cells[k].len() {
                let x = Simplex::nondegenerate(k, id);
                if let Some((i, j)) = self.identity_violation(&x) {
                    return Err(structural(format!("simplicial identity d{i} d{j} fails on cell {k}:{id}")));
                }
            }
        }
        Ok(())
    }

    /// First pair `i < j` with `d_i d_j x ≠ d_{j-1} d_i x`.
    pub fn identity_violation(&self, x: &Simplex) -> Option<(usize, usize)> {
        let k = x.dim();
        if k < 2 {
            return None;
        }
        for j in 1..=k {
            let dj = self.face(x, j);
            for i in 0..j {
                let lhs = self.face(&dj, i);
                let rhs = self.face(&self.face(x, i), j - 1);
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Checks `d_i d_j = d_{j-1} d_i` on every simplex, degenerate ones
    /// included, up to dimension `upto`. Returns the first violation.
    pub fn check_identities_upto(&self, upto: usize) -> Option<(Simplex, usize, usize)> {
        for k in 2..=upto {
            for s in self.simplices(k) {
                if let Some((i, j)) = self.identity_violation(&s) {
                    return Some((s, i, j));
                }
            }
            for s in self.simplices(k - 1) {
                // d_i s_j = s_{j-1} d_i (i < j), d_j s_j = d_{j+1} s_j = id, d_i s_j = s_j d_{i-1} (i > j+1)
                let m = k - 1;
                for j in 0..=m {
                    let sj = s.degenerate(&super::simplex::surjection_with_repeats(k, &[j]));
                    for i in 0..=k {
                        let lhs = self.face(&sj, i);
                        let rhs = if i == j || i == j + 1 {
                            s.clone()
                        } else if i < j {
                            let d = self.face(&s, i);
                            d.degenerate(&super::simplex::surjection_with_repeats(m, &[j - 1]))
                        } else {
                            let d = self.face(&s, i - 1);
                            d.degenerate(&super::simplex::surjection_with_repeats(m, &[j]))
                        };
                        if lhs != rhs {
                            return Some((sj, i, j));
                        }
                    }
                }
            }
        }
        None
    }

    /// Largest dimension carrying a nondegenerate cell (0 for the empty set).
    pub fn dim(&self) -> usize {
        self.inner.cells.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.inner.cells.is_empty()
    }

    /// Number of nondegenerate `k`-cells.
    pub fn count(&self, k: usize) -> usize {
        self.inner.cells.get(k).map_or(0, |c| c.len())
    }

    pub fn counts(&self) -> Vec<usize> {
        self.inner.cells.iter().map(|c| c.len()).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.inner.cells.iter().map(|c| c.len()).sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn cell_faces(&self, k: usize, i: usize) -> &[Simplex] {
        &self.inner.cells[k][i]
    }

    pub(crate) fn raw_cells(&self) -> &Vec<Vec<Vec<Simplex>>> {
        &self.inner.cells
    }

    /// `θ* s` for a monotone `θ: [p] -> [dim s]`.
    pub fn apply(&self, s: &Simplex, theta: &[usize]) -> Simplex {
        let phi = compose(&s.surj, theta);
        let (iota, tau) = epi_mono(&phi);
        let face = self.face_by_mono(s.base, s.id, &iota);
        Simplex { base: face.base, id: face.id, surj: compose(&face.surj, &tau) }
    }

    /// The face of the nondegenerate cell `(m, id)` along an injective `ι`.
    fn face_by_mono(&self, m: usize, id: usize, iota: &[usize]) -> Simplex {
        if iota.len() == m + 1 {
            return Simplex::nondegenerate(m, id);
        }
        let missing = (0..=m).rev().find(|v| iota.binary_search(v).is_err()).expect("proper face");
        let face = &self.inner.cells[m][id][missing];
        let rest: Vec<usize> = iota.iter().map(|&v| if v > missing { v - 1 } else { v }).collect();
        self.apply(face, &rest)
    }

    /// `d_i s`.
    pub fn face(&self, s: &Simplex, i: usize) -> Simplex {
        self.apply(s, &coface(s.dim(), i))
    }

    /// Vertex ids of `s` in order.
    pub fn vertices(&self, s: &Simplex) -> Vec<usize> {
        (0..=s.dim()).map(|t| self.apply(s, &[t]).id).collect()
    }

    /// All `k`-simplices: nondegenerate cells of dimension `k` first (in
    /// order), then degeneracies of lower cells by decreasing base dimension.
    pub fn simplices(&self, k: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for m in (0..=k.min(self.dim())).rev() {
            if self.count(m) == 0 {
                continue;
            }
            let surj = surjections(k, m);
            for id in 0..self.count(m) {
                for s in &surj {
                    out.push(Simplex { base: m, id, surj: s.clone() });
                }
            }
        }
        out
    }

    pub fn nondegenerate(&self, k: usize) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.count(k)).map(move |id| Simplex::nondegenerate(k, id))
    }

    pub fn all_nondegenerate(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..=self.dim()).flat_map(move |k| self.nondegenerate(k))
    }

    /// Connected components via union-find over edges.
    pub fn components(&self) -> usize {
        let mut uf = crate::engine::union_find::UnionFind::new(self.count(0));
        for e in self.nondegenerate(1) {
            let v = self.vertices(&e);
            uf.union(v[0], v[1]);
        }
        uf.classes().1
    }
}

/// A simplicial map, stored by the images of the nondegenerate cells.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialMap {
    pub dom: SimplicialSet,
    pub cod: SimplicialSet,
    pub images: Vec<Vec<Simplex>>,
}

impl fmt::Debug for SimplicialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialMap({:?} -> {:?}; {:?})", self.dom, self.cod, self.images)
    }
}

impl SimplicialMap {
    /// Validates dimensions and compatibility with every face map.
    pub fn new(dom: SimplicialSet, cod: SimplicialSet, images: Vec<Vec<Simplex>>) -> Result<Self> {
        let f = Self::new_unchecked(dom, cod, images)?;
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(dom: SimplicialSet, cod: SimplicialSet, mut images: Vec<Vec<Simplex>>) -> Result<Self> {
        images.resize(dom.inner.cells.len(), Vec::new());
        if images.len() != dom.inner.cells.len() {
            return Err(mismatch("image table has more dimensions than the domain"));
        }
        Ok(Self { dom, cod, images })
    }

    fn validate(&self) -> Result<()> {
        for k in 0..self.images.len() {
            if self.images[k].len() != self.dom.count(k) {
                return Err(mismatch(format!("dimension {k}: {} images for {} cells", self.images[k].len(), self.dom.count(k))));
            }
            for (i, s) in self.images[k].iter().enumerate() {
                if s.dim() != k || s.base >= self.cod.inner.cells.len() || s.id >= self.cod.count(s.base) {
                    return Err(structural(format!("image of cell {k}:{i} is not a {k}-simplex of the codomain")));
                }
            }
        }
        if let Some((k, i, j)) = self.face_violation() {
            return Err(structural(format!("map does not commute with face d{j} on cell {k}:{i}")));
        }
        Ok(())
    }

    /// First cell `(k, i)` and face index `j` with `f(d_j x) ≠ d_j f(x)`.
    pub fn face_violation(&self) -> Option<(usize, usize, usize)> {
        for k in 1..self.images.len() {
            for i in 0..self.images[k].len() {
                for j in 0..=k {
                    let lhs = self.apply(&self.dom.cell_faces(k, i)[j]);
                    let rhs = self.cod.face(&self.images[k][i], j);
                    if lhs != rhs {
                        return Some((k, i, j));
                    }
                }
            }
        }
        None
    }

    pub fn identity(x: &SimplicialSet) -> Self {
        let images = (0..=x.dim())
            .map(|k| x.nondegenerate(k).collect())
            .collect::<Vec<_>>();
        let images = if x.is_empty() { Vec::new() } else { images };
        Self { dom: x.clone(), cod: x.clone(), images }
    }

    pub fn from_empty(x: &SimplicialSet) -> Self {
        Self { dom: SimplicialSet::empty(), cod: x.clone(), images: Vec::new() }
    }

    /// Image of an arbitrary simplex of the domain.
    pub fn apply(&self, s: &Simplex) -> Simplex {
        let image = &self.images[s.base][s.id];
        self.cod.apply(image, &s.surj)
    }

    pub fn image_of(&self, k: usize, i: usize) -> &Simplex {
        &self.images[k][i]
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SimplicialMap) -> Result<SimplicialMap> {
        if self.cod != g.dom {
            return Err(mismatch("compose: codomain and domain differ"));
        }
        let images = self
            .images
            .iter()
            .map(|level| level.iter().map(|s| g.apply(s)).collect())
            .collect();
        Ok(SimplicialMap { dom: self.dom.clone(), cod: g.cod.clone(), images })
    }

    /// Injective on all simplices: nondegenerate cells go to pairwise
    /// distinct nondegenerate cells.
    pub fn is_mono(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.images
            .iter()
            .flatten()
            .all(|s| !s.is_degenerate() && seen.insert((s.base, s.id)))
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.dom.counts() == self.cod.counts()
    }

    /// The image as a subobject of the codomain.
    pub fn image(&self) -> Subobject {
        let mut sub = Subobject::empty(&self.cod);
        for s in self.images.iter().flatten() {
            sub.cells[s.base][s.id] = true;
        }
        sub.close_under_faces();
        sub
    }
}

/// A face-closed set of nondegenerate cells of an ambient simplicial set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subobject {
    pub ambient: SimplicialSet,
    pub cells: Vec<Vec<bool>>,
}

impl fmt::Debug for Subobject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subobject{:?} of {:?}", self.counts(), self.ambient)
    }
}

impl Subobject {
    pub fn empty(ambient: &SimplicialSet) -> Self {
        let cells = ambient.counts().iter().map(|&c| vec![false; c]).collect();
        Self { ambient: ambient.clone(), cells }
    }

    pub fn full(ambient: &SimplicialSet) -> Self {
        let cells = ambient.counts().iter().map(|&c| vec![true; c]).collect();
        Self { ambient: ambient.clone(), cells }
    }

    /// The smallest subobject containing the given cells.
    pub fn generated_by(ambient: &SimplicialSet, generators: &[(usize, usize)]) -> Self {
        let mut sub = Self::empty(ambient);
        for &(k, i) in generators {
            sub.cells[k][i] = true;
        }
        sub.close_under_faces();
        sub
    }

    pub(crate) fn close_under_faces(&mut self) {
        for k in (1..self.cells.len()).rev() {
            for i in 0..self.cells[k].len() {
                if self.cells[k][i] {
                    for f in self.ambient.cell_faces(k, i) {
                        self.cells[f.base][f.id] = true;
                    }
                }
            }
        }
    }

    pub fn is_face_closed(&self) -> bool {
        (1..self.cells.len()).all(|k| {
            (0..self.cells[k].len()).all(|i| {
                !self.cells[k][i] || self.ambient.cell_faces(k, i).iter().all(|f| self.cells[f.base][f.id])
            })
        })
    }

    pub fn contains_cell(&self, k: usize, i: usize) -> bool {
        self.cells[k][i]
    }

    /// Whether an arbitrary simplex of the ambient lies in the subobject.
    pub fn contains(&self, s: &Simplex) -> bool {
        self.cells[s.base][s.id]
    }

    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(|l| l.iter().filter(|&&b| b).count()).collect()
    }

    pub fn len(&self) -> usize {
        self.counts().iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a && b)
    }

    /// Cells in `self` but not in `other` (not face-closed in general).
    pub fn difference_cells(&self, other: &Self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, level) in self.cells.iter().enumerate() {
            for (i, &b) in level.iter().enumerate() {
                if b && !other.cells[k][i] {
                    out.push((k, i));
                }
            }
        }
        out
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(a, b)| a.iter().zip(b).all(|(&x, &y)| !x || y))
    }

    fn zip(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(mismatch("subobjects of different ambients"));
        }
        let cells = self
            .cells
            .iter()
            .zip(&other.cells)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| op(x, y)).collect())
            .collect();
        Ok(Self { ambient: self.ambient.clone(), cells })
    }

    /// Member cells in ambient order, per dimension.
    pub fn members(&self) -> Vec<Vec<usize>> {
        self.cells
            .iter()
            .map(|l| l.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect())
            .collect()
    }

    /// The subobject as a simplicial set (cells in ambient order) with its inclusion.
    pub fn realize(&self) -> (SimplicialSet, SimplicialMap) {
        let members = self.members();
        let mut renumber: Vec<Vec<usize>> = self.cells.iter().map(|l| vec![usize::MAX; l.len()]).collect();
        for (k, m) in members.iter().enumerate() {
            for (new, &old) in m.iter().enumerate() {
                renumber[k][old] = new;
            }
        }
        let cells: Vec<Vec<Vec<Simplex>>> = members
            .iter()
            .enumerate()
            .map(|(k, m)| {
                m.iter()
                    .map(|&old| {
                        self.ambient
                            .cell_faces(k, old)
                            .iter()
                            .map(|f| Simplex { base: f.base, id: renumber[f.base][f.id], surj: f.surj.clone() })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let sub = SimplicialSet::new_unchecked(cells);
        let images = members
            .iter()
            .enumerate()
            .map(|(k, m)| m.iter().map(|&old| Simplex::nondegenerate(k, old)).collect())
            .collect();
        let inclusion = SimplicialMap::new_unchecked(sub.clone(), self.ambient.clone(), images)
            .expect("inclusion table has the domain's shape");
        (sub, inclusion)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::cells::{generate_cell, CellKind};

    #[test]
    fn faces_of_a_degenerate_simplex() {
        let d1 = generate_cell(CellKind::Simplex, 1, None).unwrap();
        // s0 of the edge: vertices 0,0,1
        let s = Simplex { base: 1, id: 0, surj: vec![0, 0, 1] };
        assert_eq!(d1.vertices(&s), vec![0, 0, 1]);
        assert_eq!(d1.face(&s, 0), Simplex::nondegenerate(1, 0));
        assert_eq!(d1.face(&s, 1), Simplex::nondegenerate(1, 0));
        assert_eq!(d1.face(&s, 2), Simplex { base: 0, id: 0, surj: vec![0, 0] });
    }

    #[test]
    fn identities_hold_on_degenerate_simplices() {
        let d2 = generate_cell(CellKind::Simplex, 2, None).unwrap();
        assert_eq!(d2.check_identities_upto(4), None);
    }

    #[test]
    fn rejects_inconsistent_faces() {
        // an edge whose faces are both vertex 0, then a triangle whose
        // boundary does not close up
        let v = |i| Simplex::nondegenerate(0, i);
        let e = |i| Simplex::nondegenerate(1, i);
        let cells = vec![
            vec![vec![], vec![]],
            vec![vec![v(1), v(0)], vec![v(1), v(0)], vec![v(0), v(1)]],
            vec![vec![e(2), e(1), e(0)]],
        ];
        assert!(SimplicialSet::new(cells).is_err());
    }

    #[test]
    fn subobject_realization() {
        let d2 = generate_cell(CellKind::Simplex, 2, None).unwrap();
        let edge = Subobject::generated_by(&d2, &[(1, 0)]);
        assert_eq!(edge.counts(), vec![2, 1, 0]);
        let (x, inc) = edge.realize();
        assert_eq!(x.counts(), vec![2, 1]);
        assert!(inc.is_mono());
        assert_eq!(inc.image(), edge);
    }
}

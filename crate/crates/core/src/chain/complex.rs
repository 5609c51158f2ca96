//! Bounded chain complexes of finitely presented abelian groups and chain
//! maps between them. Degrees are homological: `d_k : C_k -> C_{k-1}`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::group::FPAbelianGroup;
use super::matrix::IntMatrix;
use super::snf::{columns_in_lattice, image_basis, kernel_basis, smith_normal_form, solve_with};
use crate::error::{mismatch, structural, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChainComplex {
    lo: i64,
    groups: Vec<FPAbelianGroup>,
    /// `diffs[i]` is `d_{lo+i}`; `diffs[0]` has no rows.
    diffs: Vec<IntMatrix>,
}

impl std::fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<usize> = self.groups.iter().map(|g| g.gens()).collect();
        write!(f, "Chain(lo={}, gens={gens:?})", self.lo)
    }
}

impl ChainComplex {
    /// `groups[i]` sits in degree `lo + i`; `diffs[i]` is `d_{lo+i+1}`
    /// (so `diffs.len() + 1 == groups.len()` unless both are empty).
    pub fn new(lo: i64, groups: Vec<FPAbelianGroup>, diffs: Vec<IntMatrix>) -> Result<Self> {
        if groups.is_empty() {
            if !diffs.is_empty() {
                return Err(mismatch("differentials given for an empty complex"));
            }
            return Ok(Self::zero());
        }
        if diffs.len() + 1 != groups.len() {
            return Err(mismatch(format!("{} groups but {} differentials", groups.len(), diffs.len())));
        }
        let mut full = vec![IntMatrix::zeros(0, groups[0].gens())];
        full.extend(diffs);
        let c = Self { lo, groups, diffs: full };
        c.validate()?;
        Ok(c.trimmed())
    }

    pub fn zero() -> Self {
        Self { lo: 0, groups: Vec::new(), diffs: Vec::new() }
    }

    /// A single group in degree `k`.
    pub fn concentrated(k: i64, group: FPAbelianGroup) -> Self {
        Self::new(k, vec![group], Vec::new()).expect("one-group complex")
    }

    /// Free groups of the given ranks from degree `lo` upward.
    /// `ℤ --id--> ℤ` in degrees `k` and `k - 1`.
    pub fn disk(k: i64) -> Self {
        Self::free(k - 1, &[1, 1], vec![IntMatrix::from_rows(&[vec![1]])]).expect("disk complex")
    }

    pub fn free(lo: i64, ranks: &[usize], diffs: Vec<IntMatrix>) -> Result<Self> {
        Self::new(lo, ranks.iter().map(|&r| FPAbelianGroup::free(r)).collect(), diffs)
    }

    fn validate(&self) -> Result<()> {
        for (i, d) in self.diffs.iter().enumerate() {
            let below = if i == 0 { 0 } else { self.groups[i - 1].gens() };
            if d.rows() != below || d.cols() != self.groups[i].gens() {
                return Err(mismatch(format!(
                    "d_{} is {}x{}, expected {}x{}",
                    self.lo + i as i64,
                    d.rows(),
                    d.cols(),
                    below,
                    self.groups[i].gens()
                )));
            }
        }
        for i in 1..self.groups.len() {
            let k = self.lo + i as i64;
            let dr = self.diffs[i].mul(self.groups[i].relations())?;
            if !columns_in_lattice(self.groups[i - 1].relations(), &dr) {
                return Err(structural(format!("d_{k} does not respect the relations in degree {k}")));
            }
            if i >= 2 {
                let dd = self.diffs[i - 1].mul(&self.diffs[i])?;
                if !columns_in_lattice(self.groups[i - 2].relations(), &dd) {
                    return Err(structural(format!("d_{} ∘ d_{k} is not zero", k - 1)));
                }
            }
        }
        Ok(())
    }

    fn trimmed(mut self) -> Self {
        while self.groups.last().is_some_and(|g| g.gens() == 0) {
            self.groups.pop();
            self.diffs.pop();
        }
        let lead = self.groups.iter().take_while(|g| g.gens() == 0).count();
        if lead == self.groups.len() {
            return Self::zero();
        }
        self.groups.drain(..lead);
        self.diffs.drain(..lead);
        self.diffs[0] = IntMatrix::zeros(0, self.groups[0].gens());
        self.lo += lead as i64;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Top degree; `lo - 1` for the zero complex.
    pub fn hi(&self) -> i64 {
        self.lo + self.groups.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    fn slot(&self, k: i64) -> Option<usize> {
        (k >= self.lo && k <= self.hi()).then(|| (k - self.lo) as usize)
    }

    pub fn group(&self, k: i64) -> FPAbelianGroup {
        self.slot(k).map_or_else(FPAbelianGroup::zero, |i| self.groups[i].clone())
    }

    pub fn gens(&self, k: i64) -> usize {
        self.slot(k).map_or(0, |i| self.groups[i].gens())
    }

    pub fn relations(&self, k: i64) -> IntMatrix {
        self.slot(k).map_or_else(|| IntMatrix::zeros(0, 0), |i| self.groups[i].relations().clone())
    }

    /// `d_k` as a `gens(k-1) x gens(k)` matrix.
    pub fn diff(&self, k: i64) -> IntMatrix {
        let d = match self.slot(k) {
            Some(i) => self.diffs[i].clone(),
            None => IntMatrix::zeros(self.gens(k - 1), self.gens(k)),
        };
        d.pipe_rows(self.gens(k - 1))
    }

    /// Euler characteristic from the presentations (ranks of the groups).
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|k| if k.rem_euclid(2) == 0 { 1 } else { -1 } * self.group(k).rank() as i64)
            .sum()
    }

    pub fn to_json(&self) -> Value {
        let degrees: Vec<Value> = self
            .degrees()
            .map(|k| {
                json!({
                    "degree": k.to_string(),
                    "generators": self.gens(k).to_string(),
                    "group": self.group(k).to_string(),
                    "relations": matrix_json(&self.relations(k)),
                    "differential": matrix_json(&self.diff(k)),
                })
            })
            .collect();
        json!({ "lo": self.lo.to_string(), "hi": self.hi().to_string(), "degrees": degrees })
    }
}

trait PipeRows {
    fn pipe_rows(self, rows: usize) -> IntMatrix;
}

impl PipeRows for IntMatrix {
    /// `diffs[0]` has no rows; below the bottom the target is zero anyway.
    fn pipe_rows(self, rows: usize) -> IntMatrix {
        if self.rows() == rows {
            self
        } else {
            IntMatrix::zeros(rows, self.cols())
        }
    }
}

/// Row-major matrix with entries as decimal strings.
pub fn matrix_json(m: &IntMatrix) -> Value {
    json!({
        "rows": m.rows().to_string(),
        "cols": m.cols().to_string(),
        "entries": m.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    })
}

#[derive(Clone, PartialEq, Eq)]
pub struct ChainMap {
    pub dom: ChainComplex,
    pub cod: ChainComplex,
    /// Indexed by domain degree, each `cod.gens(k) x dom.gens(k)`.
    mats: Vec<IntMatrix>,
}

impl std::fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ChainMap({:?} -> {:?}: {:?})", self.dom, self.cod, self.mats)
    }
}

impl ChainMap {
    /// `mats[i]` is the component in degree `dom.lo() + i`.
    pub fn new(dom: ChainComplex, cod: ChainComplex, mats: Vec<IntMatrix>) -> Result<Self> {
        let f = Self::new_unchecked(dom, cod, mats)?;
        if let Some(msg) = f.violation() {
            return Err(structural(msg));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(dom: ChainComplex, cod: ChainComplex, mats: Vec<IntMatrix>) -> Result<Self> {
        if mats.len() != dom.groups.len() {
            return Err(mismatch(format!("{} components for {} degrees", mats.len(), dom.groups.len())));
        }
        for (k, m) in dom.degrees().zip(&mats) {
            if m.rows() != cod.gens(k) || m.cols() != dom.gens(k) {
                return Err(mismatch(format!("component in degree {k} has the wrong shape")));
            }
        }
        Ok(Self { dom, cod, mats })
    }

    /// The first failure of relation compatibility or of `d f = f d`.
    pub fn violation(&self) -> Option<String> {
        for k in self.dom.degrees() {
            let f = self.matrix(k);
            let fr = f.mul(&self.dom.relations(k)).ok()?;
            if !columns_in_lattice(&self.cod.relations(k), &fr) {
                return Some(format!("degree {k} component does not respect relations"));
            }
        }
        let lo = self.dom.lo().min(self.cod.lo());
        let hi = self.dom.hi().max(self.cod.hi());
        for k in lo..=hi {
            let df = self.cod.diff(k).mul(&self.matrix(k)).ok()?;
            let fd = self.matrix(k - 1).mul(&self.dom.diff(k)).ok()?;
            let diff = df.sub(&fd).ok()?;
            if !columns_in_lattice(&self.cod.relations(k - 1), &diff) {
                return Some(format!("d f != f d in degree {k}"));
            }
        }
        None
    }

    /// Component in degree `k` (zero outside the domain's range).
    pub fn matrix(&self, k: i64) -> IntMatrix {
        match self.dom.slot(k) {
            Some(i) => self.mats[i].clone(),
            None => IntMatrix::zeros(self.cod.gens(k), self.dom.gens(k)),
        }
    }

    pub fn from_fn(dom: &ChainComplex, cod: &ChainComplex, f: impl Fn(i64) -> IntMatrix) -> Result<Self> {
        Self::new(dom.clone(), cod.clone(), dom.degrees().map(f).collect())
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let mats = c.degrees().map(|k| IntMatrix::identity(c.gens(k))).collect();
        Self { dom: c.clone(), cod: c.clone(), mats }
    }

    pub fn zero_map(dom: &ChainComplex, cod: &ChainComplex) -> Self {
        let mats = dom.degrees().map(|k| IntMatrix::zeros(cod.gens(k), dom.gens(k))).collect();
        Self { dom: dom.clone(), cod: cod.clone(), mats }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ChainMap) -> Result<ChainMap> {
        if self.cod != g.dom {
            return Err(mismatch("composite of chain maps with mismatched ends"));
        }
        let mats = self
            .dom
            .degrees()
            .map(|k| g.matrix(k).mul(&self.matrix(k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { dom: self.dom.clone(), cod: g.cod.clone(), mats })
    }

    /// Equality as maps of presented groups.
    pub fn equals(&self, other: &ChainMap) -> bool {
        self.dom == other.dom
            && self.cod == other.cod
            && self.dom.degrees().all(|k| {
                self.matrix(k)
                    .sub(&other.matrix(k))
                    .is_ok_and(|d| columns_in_lattice(&self.cod.relations(k), &d))
            })
    }

    /// Injective in every degree.
    pub fn is_mono(&self) -> bool {
        self.dom.degrees().all(|k| {
            let g = self.dom.gens(k);
            let Ok(stacked) = self.matrix(k).hstack(&self.cod.relations(k).pipe_rows(self.cod.gens(k))) else {
                return false;
            };
            let kernel = kernel_basis(&stacked).row_range(0, g);
            columns_in_lattice(&self.dom.relations(k), &kernel)
        })
    }

    /// Surjective in every degree.
    pub fn is_epi(&self) -> bool {
        let lo = self.dom.lo().min(self.cod.lo());
        (lo..=self.cod.hi()).all(|k| {
            let n = self.cod.gens(k);
            let Ok(stacked) = self.matrix(k).hstack(&self.cod.relations(k)) else {
                return false;
            };
            columns_in_lattice(&stacked, &IntMatrix::identity(n))
        })
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }
}

/// `H_k(C)` for one degree.
pub fn homology_in_degree(c: &ChainComplex, k: i64) -> Result<FPAbelianGroup> {
    let g = c.gens(k);
    if g == 0 {
        return Ok(FPAbelianGroup::zero());
    }
    // cycles: x with d x ∈ relations below
    let below = c.relations(k - 1).pipe_rows(c.gens(k - 1));
    let stacked = c.diff(k).hstack(&below)?;
    let cycles = image_basis(&kernel_basis(&stacked).row_range(0, g));
    let boundaries = c.diff(k + 1).hstack(&c.relations(k))?;
    let snf = smith_normal_form(&cycles);
    let mut coords = Vec::with_capacity(boundaries.cols());
    for col in boundaries.columns() {
        match solve_with(&snf, cycles.cols(), &col) {
            Some(z) => coords.push(z),
            None => {
                return Err(structural(format!(
                    "boundary in degree {k} is not a cycle (d∘d ≠ 0 or relations not respected)"
                )))
            }
        }
    }
    FPAbelianGroup::new(cycles.cols(), IntMatrix::from_columns(cycles.cols(), &coords))
}

/// Homology in every degree of `C`'s range.
pub fn complex_homology(c: &ChainComplex) -> Result<Vec<FPAbelianGroup>> {
    c.degrees().map(|k| homology_in_degree(c, k)).collect()
}

/// Homology in degrees `from..=to`.
pub fn homology_range(c: &ChainComplex, from: i64, to: i64) -> Result<Vec<FPAbelianGroup>> {
    (from..=to).map(|k| homology_in_degree(c, k)).collect()
}

/// Generators of a tensor product, degree by degree: `(p, a, b)` is
/// `e_a ⊗ e_b` with `e_a` in degree `p` of the left factor.
#[derive(Debug, Clone)]
pub struct TensorLayout {
    pub lo: i64,
    pub gens: Vec<Vec<(i64, usize, usize)>>,
    index: HashMap<(i64, i64, usize, usize), usize>,
}

impl TensorLayout {
    pub fn new(c: &ChainComplex, d: &ChainComplex) -> Self {
        if c.is_zero() || d.is_zero() {
            return Self { lo: 0, gens: Vec::new(), index: HashMap::new() };
        }
        let lo = c.lo() + d.lo();
        let hi = c.hi() + d.hi();
        let mut gens = Vec::new();
        let mut index = HashMap::new();
        for n in lo..=hi {
            let mut level = Vec::new();
            for p in c.degrees() {
                for a in 0..c.gens(p) {
                    for b in 0..d.gens(n - p) {
                        index.insert((n, p, a, b), level.len());
                        level.push((p, a, b));
                    }
                }
            }
            gens.push(level);
        }
        Self { lo, gens, index }
    }

    pub fn count(&self, n: i64) -> usize {
        let i = n - self.lo;
        if i < 0 || i as usize >= self.gens.len() {
            0
        } else {
            self.gens[i as usize].len()
        }
    }

    pub fn level(&self, n: i64) -> &[(i64, usize, usize)] {
        let i = n - self.lo;
        if i < 0 || i as usize >= self.gens.len() {
            &[]
        } else {
            &self.gens[i as usize]
        }
    }

    pub fn index(&self, n: i64, p: i64, a: usize, b: usize) -> usize {
        self.index[&(n, p, a, b)]
    }
}

fn sign(exp: i64) -> BigInt {
    if exp.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Graded tensor product with `d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy`.
pub fn tensor_complex(c: &ChainComplex, d: &ChainComplex) -> ChainComplex {
    let layout = TensorLayout::new(c, d);
    if layout.gens.is_empty() {
        return ChainComplex::zero();
    }
    let mut groups = Vec::new();
    let mut diffs = Vec::new();
    let hi = layout.lo + layout.gens.len() as i64 - 1;
    for n in layout.lo..=hi {
        let count = layout.count(n);
        let mut rels: Vec<Vec<BigInt>> = Vec::new();
        for p in c.degrees() {
            let q = n - p;
            for r in c.relations(p).columns() {
                for b in 0..d.gens(q) {
                    let mut v = vec![BigInt::zero(); count];
                    for (a, x) in r.iter().enumerate() {
                        v[layout.index(n, p, a, b)] = x.clone();
                    }
                    rels.push(v);
                }
            }
            for r in d.relations(q).columns() {
                for a in 0..c.gens(p) {
                    let mut v = vec![BigInt::zero(); count];
                    for (b, x) in r.iter().enumerate() {
                        v[layout.index(n, p, a, b)] = x.clone();
                    }
                    rels.push(v);
                }
            }
        }
        groups.push(FPAbelianGroup::new(count, IntMatrix::from_columns(count, &rels)).expect("tensor relations"));
        if n > layout.lo {
            let below = layout.count(n - 1);
            let mut m = IntMatrix::zeros(below, count);
            for (col, &(p, a, b)) in layout.level(n).iter().enumerate() {
                let q = n - p;
                let dc = c.diff(p);
                for a2 in 0..c.gens(p - 1) {
                    let x = dc.get(a2, a);
                    if !x.is_zero() {
                        m.add_to(layout.index(n - 1, p - 1, a2, b), col, x);
                    }
                }
                let dd = d.diff(q);
                let s = sign(p);
                for b2 in 0..d.gens(q - 1) {
                    let x = dd.get(b2, b);
                    if !x.is_zero() {
                        m.add_to(layout.index(n - 1, p, a, b2), col, &(&s * x));
                    }
                }
            }
            diffs.push(m);
        }
    }
    let out = ChainComplex::new(layout.lo, groups, diffs).expect("tensor of complexes is a complex");
    debug_assert!(complex_homology(&out).is_ok());
    out
}

/// `f ⊗ g` on generators.
pub fn tensor_chain_maps(f: &ChainMap, g: &ChainMap) -> ChainMap {
    let src = tensor_complex(&f.dom, &g.dom);
    let tgt = tensor_complex(&f.cod, &g.cod);
    let ls = TensorLayout::new(&f.dom, &g.dom);
    let lt = TensorLayout::new(&f.cod, &g.cod);
    let mats = src
        .degrees()
        .map(|n| {
            let mut m = IntMatrix::zeros(lt.count(n), ls.count(n));
            for (col, &(p, a, b)) in ls.level(n).iter().enumerate() {
                let q = n - p;
                let fp = f.matrix(p);
                let gq = g.matrix(q);
                for a2 in 0..f.cod.gens(p) {
                    let x = fp.get(a2, a);
                    if x.is_zero() {
                        continue;
                    }
                    for b2 in 0..g.cod.gens(q) {
                        let y = gq.get(b2, b);
                        if !y.is_zero() {
                            m.add_to(lt.index(n, p, a2, b2), col, &(x * y));
                        }
                    }
                }
            }
            m
        })
        .collect();
    ChainMap::new_unchecked(src, tgt, mats).expect("tensor of chain maps")
}

/// `x ⊗ y ↦ (-1)^{|x||y|} y ⊗ x`.
pub fn chain_symmetry(c: &ChainComplex, d: &ChainComplex) -> ChainMap {
    let src = tensor_complex(c, d);
    let tgt = tensor_complex(d, c);
    let ls = TensorLayout::new(c, d);
    let lt = TensorLayout::new(d, c);
    let mats = src
        .degrees()
        .map(|n| {
            let mut m = IntMatrix::zeros(lt.count(n), ls.count(n));
            for (col, &(p, a, b)) in ls.level(n).iter().enumerate() {
                let q = n - p;
                m.set(lt.index(n, q, b, a), col, sign(p * q));
            }
            m
        })
        .collect();
    ChainMap::new_unchecked(src, tgt, mats).expect("symmetry")
}

/// `(x ⊗ y) ⊗ z -> x ⊗ (y ⊗ z)`, or the inverse when `inverse` is set.
pub fn chain_associator(x: &ChainComplex, y: &ChainComplex, z: &ChainComplex, inverse: bool) -> ChainMap {
    let xy = tensor_complex(x, y);
    let yz = tensor_complex(y, z);
    let left = tensor_complex(&xy, z);
    let right = tensor_complex(x, &yz);
    let l_xy = TensorLayout::new(x, y);
    let l_yz = TensorLayout::new(y, z);
    let l_left = TensorLayout::new(&xy, z);
    let l_right = TensorLayout::new(x, &yz);
    let forward: Vec<IntMatrix> = left
        .degrees()
        .map(|n| {
            let mut m = IntMatrix::zeros(l_right.count(n), l_left.count(n));
            for (col, &(pxy, i, c)) in l_left.level(n).iter().enumerate() {
                let (p, a, b) = l_xy.level(pxy)[i];
                let j = l_yz.index(n - p, pxy - p, b, c);
                m.set(l_right.index(n, p, a, j), col, BigInt::one());
            }
            m
        })
        .collect();
    if inverse {
        let mats = right.degrees().zip(&forward).map(|(_, m)| m.transpose()).collect();
        ChainMap::new_unchecked(right, left, mats).expect("associator")
    } else {
        ChainMap::new_unchecked(left, right, forward).expect("associator")
    }
}

/// `Cone(f)_k = X_{k-1} ⊕ Y_k` with `d(x, y) = (-dx, f x + dy)`.
pub fn mapping_cone(f: &ChainMap) -> Result<ChainComplex> {
    let (x, y) = (&f.dom, &f.cod);
    if x.is_zero() && y.is_zero() {
        return Ok(ChainComplex::zero());
    }
    let lo = if x.is_zero() { y.lo() } else if y.is_zero() { x.lo() + 1 } else { (x.lo() + 1).min(y.lo()) };
    let hi = (x.hi() + 1).max(y.hi());
    let mut groups = Vec::new();
    let mut diffs = Vec::new();
    for k in lo..=hi {
        let (gx, gy) = (x.gens(k - 1), y.gens(k));
        let rx = x.relations(k - 1).pipe_rows(gx);
        let ry = y.relations(k).pipe_rows(gy);
        groups.push(FPAbelianGroup::new(gx + gy, IntMatrix::block_diag(&[rx, ry]))?);
        if k > lo {
            let (bx, by) = (x.gens(k - 2), y.gens(k - 1));
            let mut m = IntMatrix::zeros(bx + by, gx + gy);
            let dx = x.diff(k - 1);
            for r in 0..bx {
                for c in 0..gx {
                    m.set(r, c, -dx.get(r, c));
                }
            }
            let fk = f.matrix(k - 1);
            for r in 0..by {
                for c in 0..gx {
                    m.set(bx + r, c, fk.get(r, c).clone());
                }
            }
            let dy = y.diff(k);
            for r in 0..by {
                for c in 0..gy {
                    m.set(bx + r, gx + c, dy.get(r, c).clone());
                }
            }
            diffs.push(m);
        }
    }
    ChainComplex::new(lo, groups, diffs)
}

/// Whether the mapping cone of `f` has vanishing homology in all degrees `≤ upto`.
pub fn chain_is_homology_iso(f: &ChainMap, upto: i64) -> Result<bool> {
    let cone = mapping_cone(f)?;
    if cone.is_zero() {
        return Ok(true);
    }
    Ok(homology_range(&cone, cone.lo(), upto.min(cone.hi()))?.iter().all(|h| h.is_trivial()))
}

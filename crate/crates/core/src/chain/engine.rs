use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::complex::{
    chain_associator, chain_symmetry, tensor_chain_maps, tensor_complex, ChainComplex, ChainMap,
};
use super::group::FPAbelianGroup;
use super::matrix::IntMatrix;
use super::snf::solve;
use crate::engine::{coinvariants, Engine, EngineTag, FinGroup, GroupAction};
use crate::error::{mismatch, Result};

/// Bounded chain complexes of finitely presented abelian groups with the
/// Koszul-signed tensor product.
#[derive(Debug, Clone, Copy, Default)]
pub struct Chain;

/// Degree range spanned by a list of complexes.
fn span(xs: &[&ChainComplex]) -> Option<(i64, i64)> {
    let nonzero: Vec<_> = xs.iter().filter(|x| !x.is_zero()).collect();
    let lo = nonzero.iter().map(|x| x.lo()).min()?;
    let hi = nonzero.iter().map(|x| x.hi()).max()?;
    Some((lo, hi))
}

impl Engine for Chain {
    type Obj = ChainComplex;
    type Mor = ChainMap;

    fn tag(&self) -> EngineTag {
        EngineTag::Chain
    }

    fn dom(&self, f: &ChainMap) -> ChainComplex {
        f.dom.clone()
    }

    fn cod(&self, f: &ChainMap) -> ChainComplex {
        f.cod.clone()
    }

    fn identity(&self, x: &ChainComplex) -> ChainMap {
        ChainMap::identity(x)
    }

    fn compose(&self, g: &ChainMap, f: &ChainMap) -> Result<ChainMap> {
        f.then(g)
    }

    fn initial(&self) -> ChainComplex {
        ChainComplex::zero()
    }

    fn from_initial(&self, x: &ChainComplex) -> ChainMap {
        ChainMap::zero_map(&ChainComplex::zero(), x)
    }

    fn unit(&self) -> ChainComplex {
        ChainComplex::concentrated(0, FPAbelianGroup::free(1))
    }

    fn coproduct(&self, xs: &[ChainComplex]) -> (ChainComplex, Vec<ChainMap>) {
        let refs: Vec<&ChainComplex> = xs.iter().collect();
        let Some((lo, hi)) = span(&refs) else {
            let zero = ChainComplex::zero();
            let inj = xs.iter().map(|x| ChainMap::zero_map(x, &zero)).collect();
            return (zero, inj);
        };
        let groups = (lo..=hi)
            .map(|k| {
                let total = xs.iter().map(|x| x.gens(k)).sum();
                let rels: Vec<IntMatrix> = xs.iter().map(|x| padded_relations(x, k)).collect();
                FPAbelianGroup::new(total, IntMatrix::block_diag(&rels)).expect("block relations")
            })
            .collect();
        let diffs = (lo + 1..=hi)
            .map(|k| IntMatrix::block_diag(&xs.iter().map(|x| x.diff(k)).collect::<Vec<_>>()))
            .collect();
        let sum = ChainComplex::new(lo, groups, diffs).expect("direct sum of complexes");
        let inj = xs
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let mats = x
                    .degrees()
                    .map(|k| {
                        let offset: usize = xs[..i].iter().map(|y| y.gens(k)).sum();
                        let mut m = IntMatrix::zeros(sum.gens(k), x.gens(k));
                        for j in 0..x.gens(k) {
                            m.set(offset + j, j, BigInt::one());
                        }
                        m
                    })
                    .collect();
                ChainMap::new(x.clone(), sum.clone(), mats).expect("coproduct injection")
            })
            .collect();
        (sum, inj)
    }

    fn copair(&self, legs: &[ChainMap], target: &ChainComplex) -> Result<ChainMap> {
        if legs.iter().any(|f| f.cod != *target) {
            return Err(mismatch("copair legs have different targets"));
        }
        let doms: Vec<ChainComplex> = legs.iter().map(|f| f.dom.clone()).collect();
        let (sum, _) = self.coproduct(&doms);
        let mats = sum
            .degrees()
            .map(|k| {
                let parts: Vec<IntMatrix> = legs.iter().map(|f| f.matrix(k)).collect();
                IntMatrix::hstack_all(target.gens(k), &parts)
            })
            .collect::<Result<Vec<_>>>()?;
        ChainMap::new(sum, target.clone(), mats)
    }

    fn coequalizer(&self, f: &ChainMap, g: &ChainMap) -> Result<(ChainComplex, ChainMap)> {
        if f.dom != g.dom || f.cod != g.cod {
            return Err(mismatch("coequalizer of a non-parallel pair"));
        }
        let y = &f.cod;
        if y.is_zero() {
            return Ok((y.clone(), ChainMap::identity(y)));
        }
        let groups = y
            .degrees()
            .map(|k| {
                let diff = f.matrix(k).sub(&g.matrix(k))?;
                FPAbelianGroup::new(y.gens(k), y.relations(k).hstack(&diff)?)
            })
            .collect::<Result<Vec<_>>>()?;
        let diffs = (y.lo() + 1..=y.hi()).map(|k| y.diff(k)).collect();
        let q_obj = ChainComplex::new(y.lo(), groups, diffs)?;
        let q = ChainMap::from_fn(y, &q_obj, |k| IntMatrix::identity(y.gens(k)))?;
        Ok((q_obj, q))
    }

    fn factor_through_epi(&self, q: &ChainMap, h: &ChainMap) -> Option<ChainMap> {
        if q.dom != h.dom {
            return None;
        }
        let (qo, t) = (&q.cod, &h.cod);
        let same_generators = q.dom.degrees() == qo.degrees()
            && qo.degrees().all(|k| q.dom.gens(k) == qo.gens(k) && q.matrix(k).is_identity());
        let mats = if same_generators {
            qo.degrees().map(|k| h.matrix(k)).collect()
        } else {
            qo.degrees()
                .map(|k| solve_factor(&q.matrix(k), &qo.relations(k), &h.matrix(k), &t.relations(k)))
                .collect::<Option<Vec<_>>>()?
        };
        let u = ChainMap::new(qo.clone(), t.clone(), mats).ok()?;
        u_then_check(&u, q, h)
    }

    fn factor_through_mono(&self, m: &ChainMap, h: &ChainMap) -> Option<ChainMap> {
        if m.cod != h.cod || !m.is_mono() {
            return None;
        }
        let (x, z, y) = (&m.dom, &h.dom, &m.cod);
        let mats = z
            .degrees()
            .map(|k| solve_lift(&m.matrix(k), &h.matrix(k), &y.relations(k), x.gens(k)))
            .collect::<Option<Vec<_>>>()?;
        let u = ChainMap::new(z.clone(), x.clone(), mats).ok()?;
        u.then(m).ok().filter(|c| c.equals(h)).map(|_| u)
    }

    fn tensor(&self, x: &ChainComplex, y: &ChainComplex) -> ChainComplex {
        tensor_complex(x, y)
    }

    fn tensor_mor(&self, f: &ChainMap, g: &ChainMap) -> ChainMap {
        tensor_chain_maps(f, g)
    }

    fn associator(&self, x: &ChainComplex, y: &ChainComplex, z: &ChainComplex) -> ChainMap {
        chain_associator(x, y, z, false)
    }

    fn associator_inv(&self, x: &ChainComplex, y: &ChainComplex, z: &ChainComplex) -> ChainMap {
        chain_associator(x, y, z, true)
    }

    fn symmetry(&self, x: &ChainComplex, y: &ChainComplex) -> ChainMap {
        chain_symmetry(x, y)
    }

    fn equal_morphisms(&self, f: &ChainMap, g: &ChainMap) -> bool {
        f.equals(g)
    }

    fn is_mono(&self, f: &ChainMap) -> bool {
        f.is_mono()
    }

    fn is_iso(&self, f: &ChainMap) -> bool {
        f.is_iso()
    }

    fn find_isomorphism(&self, x: &ChainComplex, y: &ChainComplex) -> Option<ChainMap> {
        find_chain_isomorphism(x, y)
    }

    fn describe(&self, x: &ChainComplex) -> String {
        let groups: Vec<String> = x.degrees().map(|k| format!("{k}:{}", x.group(k))).collect();
        format!("chain[{}]", groups.join(", "))
    }
}

fn padded_relations(x: &ChainComplex, k: i64) -> IntMatrix {
    let r = x.relations(k);
    if r.rows() == x.gens(k) {
        r
    } else {
        IntMatrix::zeros(x.gens(k), 0)
    }
}

fn u_then_check(u: &ChainMap, q: &ChainMap, h: &ChainMap) -> Option<ChainMap> {
    q.then(u).ok().filter(|c| c.equals(h)).map(|_| u.clone())
}

/// Solves `U Q ≡ H` and `U R_Q ≡ 0` modulo the relations `R_T`, for an
/// integer matrix `U`.
fn solve_factor(q: &IntMatrix, rq: &IntMatrix, h: &IntMatrix, rt: &IntMatrix) -> Option<IntMatrix> {
    let (t, qg, xg) = (h.rows(), q.rows(), q.cols());
    let rq = if rq.rows() == qg { rq.clone() } else { IntMatrix::zeros(qg, 0) };
    let rt = if rt.rows() == t { rt.clone() } else { IntMatrix::zeros(t, 0) };
    let (nq, nt) = (rq.cols(), rt.cols());
    let unknowns = t * qg + nt * xg + nt * nq;
    let equations = t * (xg + nq);
    let mut a = IntMatrix::zeros(equations, unknowns);
    let mut rhs = vec![BigInt::zero(); equations];
    let u_at = |i: usize, j: usize| i * qg + j;
    let w1_at = |r: usize, c: usize| t * qg + r * xg + c;
    let w2_at = |r: usize, c: usize| t * qg + nt * xg + r * nq + c;
    for i in 0..t {
        for c in 0..xg {
            let row = i * (xg + nq) + c;
            for j in 0..qg {
                a.set(row, u_at(i, j), q.get(j, c).clone());
            }
            for r in 0..nt {
                a.set(row, w1_at(r, c), -rt.get(i, r));
            }
            rhs[row] = h.get(i, c).clone();
        }
        for c in 0..nq {
            let row = i * (xg + nq) + xg + c;
            for j in 0..qg {
                a.set(row, u_at(i, j), rq.get(j, c).clone());
            }
            for r in 0..nt {
                a.set(row, w2_at(r, c), -rt.get(i, r));
            }
        }
    }
    let z = solve(&a, &rhs)?;
    let entries = z[..t * qg].to_vec();
    IntMatrix::from_big_rows(t, qg, entries).ok()
}

/// Solves `M U ≡ H` modulo the relations `R` for an integer matrix `U`
/// with `cols` rows.
fn solve_lift(m: &IntMatrix, h: &IntMatrix, r: &IntMatrix, rows: usize) -> Option<IntMatrix> {
    let (y, zg) = (h.rows(), h.cols());
    let r = if r.rows() == y { r.clone() } else { IntMatrix::zeros(y, 0) };
    let nr = r.cols();
    let mut a = IntMatrix::zeros(y * zg, rows * zg + nr * zg);
    let mut rhs = vec![BigInt::zero(); y * zg];
    for i in 0..y {
        for c in 0..zg {
            let row = i * zg + c;
            for j in 0..rows {
                a.set(row, j * zg + c, m.get(i, j).clone());
            }
            for t in 0..nr {
                a.set(row, rows * zg + t * zg + c, -r.get(i, t));
            }
            rhs[row] = h.get(i, c).clone();
        }
    }
    let sol = solve(&a, &rhs)?;
    IntMatrix::from_big_rows(rows, zg, sol[..rows * zg].to_vec()).ok()
}

/// Upper bound on candidate matrices tried per degree by the isomorphism search.
const SIGNED_PERMUTATION_LIMIT: usize = 46_080;

/// Searches signed permutation matrices degree by degree. Sound but not
/// complete: isomorphisms that are not signed permutations of generators are
/// not found.
pub fn find_chain_isomorphism(x: &ChainComplex, y: &ChainComplex) -> Option<ChainMap> {
    if x == y {
        return Some(ChainMap::identity(x));
    }
    if x.is_zero() || y.is_zero() {
        return None;
    }
    if x.lo() != y.lo() || x.hi() != y.hi() || x.degrees().any(|k| x.gens(k) != y.gens(k)) {
        return None;
    }
    let degrees: Vec<i64> = x.degrees().collect();
    let mut chosen: Vec<IntMatrix> = Vec::new();
    search_degree(x, y, &degrees, &mut chosen)
}

fn search_degree(x: &ChainComplex, y: &ChainComplex, degrees: &[i64], chosen: &mut Vec<IntMatrix>) -> Option<ChainMap> {
    let depth = chosen.len();
    if depth == degrees.len() {
        let f = ChainMap::new(x.clone(), y.clone(), chosen.clone()).ok()?;
        return f.is_iso().then_some(f);
    }
    let k = degrees[depth];
    let g = x.gens(k);
    if (1..=g).product::<usize>() << g > SIGNED_PERMUTATION_LIMIT {
        return None;
    }
    for m in signed_permutations(g) {
        // degreewise relation check and commutation with the previous degree
        let ok_rel = m
            .mul(&x.relations(k))
            .is_ok_and(|r| super::snf::columns_in_lattice(&y.relations(k), &r));
        if !ok_rel {
            continue;
        }
        if depth > 0 {
            let prev = &chosen[depth - 1];
            let lhs = y.diff(k).mul(&m).ok()?;
            let rhs = prev.mul(&x.diff(k)).ok()?;
            let diff = lhs.sub(&rhs).ok()?;
            if !super::snf::columns_in_lattice(&y.relations(k - 1), &diff) {
                continue;
            }
        }
        chosen.push(m);
        if let Some(f) = search_degree(x, y, degrees, chosen) {
            return Some(f);
        }
        chosen.pop();
    }
    None
}

fn signed_permutations(n: usize) -> Vec<IntMatrix> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        for signs in 0..(1usize << n) {
            let mut m = IntMatrix::zeros(n, n);
            for (c, &r) in p.iter().enumerate() {
                let s = if signs >> c & 1 == 1 { -BigInt::one() } else { BigInt::one() };
                m.set(r, c, s);
            }
            out.push(m);
        }
    });
    out
}

fn permutations(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permutations(p, i + 1, f);
        p.swap(i, j);
    }
}

/// `Σn` acting on `C^{⊗n}` by place permutation with Koszul signs.
pub fn sign_action_power(c: &ChainComplex, n: usize) -> Result<GroupAction<Chain>> {
    let group = Arc::new(FinGroup::symmetric(n)?);
    let factors = vec![c.clone(); n];
    let e = Chain;
    let object = e.tensor_many(&factors);
    let maps = group
        .elements()
        .map(|g| e.permute_factors(&factors, group.perm(g)))
        .collect::<Result<Vec<_>>>()?;
    GroupAction::new(&e, group, object, maps)
}

/// Degreewise coinvariants: relations `x - g·x` are added for every `g`.
pub fn chain_coinvariants(action: &GroupAction<Chain>) -> Result<ChainComplex> {
    Ok(coinvariants(&Chain, action)?.object)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::complex::complex_homology;

    fn a_complex() -> ChainComplex {
        ChainComplex::free(0, &[1, 1], vec![IntMatrix::from_rows(&[vec![1]])]).unwrap()
    }

    #[test]
    fn symmetry_involution_and_associator() {
        let e = Chain;
        let a = a_complex();
        let s1 = ChainComplex::concentrated(1, FPAbelianGroup::free(2));
        let round = e.compose(&e.symmetry(&s1, &a), &e.symmetry(&a, &s1)).unwrap();
        assert!(e.equal_morphisms(&round, &e.identity(&e.tensor(&a, &s1))));
        let f = e.associator(&a, &s1, &a);
        let g = e.associator_inv(&a, &s1, &a);
        assert!(f.violation().is_none() && g.violation().is_none());
        assert!(e.equal_morphisms(&e.compose(&g, &f).unwrap(), &e.identity(&f.dom)));
    }

    #[test]
    fn pushout_of_zero_maps() {
        let e = Chain;
        let a = a_complex();
        let z = e.initial();
        let p = e.pushout(&e.from_initial(&a), &e.from_initial(&a)).unwrap();
        let (sum, _) = e.coproduct(&[a.clone(), a]);
        assert_eq!(p.object, sum);
        assert!(z.is_zero());
    }

    #[test]
    fn factor_through_nontrivial_quotient() {
        let e = Chain;
        // Z --2--> Z: quotient by the image of twice the generator is Z/2
        let z = e.unit();
        let double = ChainMap::new(z.clone(), z.clone(), vec![IntMatrix::from_rows(&[vec![2]])]).unwrap();
        let zero = ChainMap::zero_map(&z, &z);
        let (q_obj, q) = e.coequalizer(&double, &zero).unwrap();
        assert_eq!(q_obj.group(0).to_string(), "Z/2");
        // the identity of Z does not factor through Z/2; reduction mod 2 into Z/2 does
        assert!(e.factor_through_epi(&q, &e.identity(&z)).is_none());
        assert!(e.factor_through_epi(&q, &q).is_some());
    }

    #[test]
    fn sign_action_is_an_action() {
        let a = a_complex();
        for n in 1..=3 {
            let act = sign_action_power(&a, n).unwrap();
            assert!(act.validate(&Chain).is_ok());
        }
    }

    #[test]
    fn coinvariants_of_square() {
        let act = sign_action_power(&a_complex(), 2).unwrap();
        let q = chain_coinvariants(&act).unwrap();
        let groups: Vec<String> = q.degrees().map(|k| q.group(k).to_string()).collect();
        assert_eq!(groups, vec!["Z", "Z", "Z/2"]);
        let h: Vec<String> = complex_homology(&q).unwrap().iter().map(|g| g.to_string()).collect();
        assert_eq!(h, vec!["0", "0", "Z/2"]);
    }

    #[test]
    fn signed_permutation_search() {
        let a = a_complex();
        let neg = ChainComplex::free(0, &[1, 1], vec![IntMatrix::from_rows(&[vec![-1]])]).unwrap();
        let f = find_chain_isomorphism(&a, &neg).unwrap();
        assert!(f.is_iso());
        let s = ChainComplex::concentrated(0, FPAbelianGroup::free(2));
        assert!(find_chain_isomorphism(&a, &s).is_none());
    }
}

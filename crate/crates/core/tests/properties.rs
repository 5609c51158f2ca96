//! Property tests over seeded random inputs.

use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pplab::chain::{homology_in_degree, tensor_complex, Chain, ChainComplex, FPAbelianGroup, IntMatrix};
use pplab::checkers::random::{complex, finset_map, finset_map_from, injection, injection_ladder, sset_mono, sset_map_from};
use pplab::checkers::symmetric::{build_power_contraction, non_injective_pair};
use pplab::checkers::{bsigma_homology, check_projective_cofibration};
use pplab::cli::suites::{coset_action, small_groups};
use pplab::engine::{coinvariants, induce, Engine, FinGroup, FinSet, FinSetMap, FinSetObj, GroupAction, Homomorphism};
use pplab::filtration::{binomial, orbit, q_colimit, DCPoset, Ladder};
use pplab::pp::{coinvariant_arrow, pp, pp_power, EquivariantArrow, MultiIndex};
use pplab::sset::{sset_homology, sset_product, verify_homotopy, SSet, SimplicialMap};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn all_maps(dom: usize, cod: usize) -> Vec<FinSetMap> {
    let mut out = Vec::new();
    if cod == 0 && dom > 0 {
        return out;
    }
    let total = cod.pow(dom as u32);
    for mut code in 0..total.max(1) {
        let table = (0..dom)
            .map(|_| {
                let x = code % cod.max(1);
                code /= cod.max(1);
                x
            })
            .collect();
        out.push(FinSetMap::new(cod, table).unwrap());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    /// Every commuting cocone found by brute force has exactly one induced map.
    #[test]
    fn pushout_universal_property(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = finset_map(&mut r, 2);
        let g = finset_map_from(&mut r, f.table.len(), 3);
        let po = FinSet.pushout(&f, &g).unwrap();
        let p = po.object.0;
        let t = r.gen_range(1..=2);
        let mut cocones = 0;
        for h1 in all_maps(f.cod, t) {
            for h2 in all_maps(g.cod, t) {
                if FinSet.compose(&h1, &f).unwrap() != FinSet.compose(&h2, &g).unwrap() {
                    continue;
                }
                cocones += 1;
                let through: Vec<FinSetMap> = all_maps(p, t)
                    .into_iter()
                    .filter(|u| FinSet.compose(u, &po.legs[0]).unwrap() == h1 && FinSet.compose(u, &po.legs[1]).unwrap() == h2)
                    .collect();
                prop_assert_eq!(through.len(), 1);
                let induced = po.induced(&FinSet, &[h1.clone(), h2.clone()], &FinSetObj(t)).unwrap();
                prop_assert!(FinSet.equal_morphisms(&induced, &through[0]));
            }
        }
        prop_assert!(cocones >= 1);
    }

    /// `G ·_H X` is isomorphic to `[G:H]` copies of `X`.
    #[test]
    fn induction_is_a_coproduct_over_cosets(pick in any::<(usize, usize, usize)>()) {
        let groups = small_groups().unwrap();
        let (_, g) = &groups[pick.0 % groups.len()];
        let g = Arc::new(g.clone());
        let subs = g.subgroups();
        let h = &subs[pick.1 % subs.len()];
        let ks = h.subgroups();
        let k = &ks[pick.2 % ks.len()];
        let h = Arc::new(h.clone());
        let x = coset_action(&h, k).unwrap();
        let emb = Homomorphism::by_permutations(h.clone(), g.clone()).unwrap();
        let ind = induce(&FinSet, &emb, &x).unwrap();
        let copies = vec![x.object; g.order() / h.order()];
        let (sum, _) = FinSet.coproduct(&copies);
        prop_assert!(FinSet.find_isomorphism(&ind.action.object, &sum).is_some());
    }

    /// A free action has `|X| / |G|` orbits.
    #[test]
    fn free_coinvariants_divide(seed in any::<u64>(), which in 0usize..8) {
        let groups = small_groups().unwrap();
        let (_, g) = &groups[which % groups.len()];
        let g = Arc::new(g.clone());
        let s = rng(seed).gen_range(1..=3);
        let n = g.order() * s;
        let maps = g
            .elements()
            .map(|a| FinSetMap::new(n, (0..n).map(|i| g.mul(a, i / s) * s + i % s).collect()).unwrap())
            .collect();
        let act = GroupAction::new(&FinSet, g.clone(), FinSetObj(n), maps).unwrap();
        prop_assert_eq!(coinvariants(&FinSet, &act).unwrap().object, FinSetObj(s));
    }

    #[test]
    fn symmetry_is_an_involution(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (FinSetObj(r.gen_range(0..4)), FinSetObj(r.gen_range(0..4)));
        let twice = FinSet.compose(&FinSet.symmetry(&b, &a), &FinSet.symmetry(&a, &b)).unwrap();
        prop_assert!(FinSet.equal_morphisms(&twice, &FinSet.identity(&FinSet.tensor(&a, &b))));
        let (x, y) = (complex(&mut r, 6, 1), complex(&mut r, 6, 1));
        let twice = SSet.compose(&SSet.symmetry(&y, &x), &SSet.symmetry(&x, &y)).unwrap();
        prop_assert!(SSet.equal_morphisms(&twice, &SSet.identity(&SSet.tensor(&x, &y))));
        let (c, d) = (random_chain(&mut r), random_chain(&mut r));
        let twice = Chain.compose(&Chain.symmetry(&d, &c), &Chain.symmetry(&c, &d)).unwrap();
        prop_assert!(Chain.equal_morphisms(&twice, &Chain.identity(&Chain.tensor(&c, &d))));
    }

    #[test]
    fn products_satisfy_identities_and_euler(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (x, y) = (complex(&mut r, 12, 2), complex(&mut r, 12, 2));
        let p = sset_product(&x, &y).object;
        prop_assert!(p.check_identities_upto(p.dim() + 1).is_none());
        prop_assert_eq!(p.euler_characteristic(), x.euler_characteristic() * y.euler_characteristic());
    }

    /// Monos stay monos after a product with any object and after a pushout along any map.
    #[test]
    fn monos_are_stable(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = sset_mono(&mut r, 8, 2);
        let z = complex(&mut r, 5, 1);
        prop_assert!(SSet.is_mono(&SSet.tensor_mor(&f, &SSet.identity(&z))));
        let g = sset_map_from(&mut r, &f.dom).unwrap();
        let po = SSet.pushout(&f, &g).unwrap();
        prop_assert!(SSet.is_mono(&po.legs[1]));
        prop_assert!(po.object.check_identities_upto(po.object.dim() + 1).is_none());
    }

    /// Orbits of a mono under the symmetric group are a mono, and projective
    /// power cofibrations are in particular symmetrizable.
    #[test]
    fn coinvariants_keep_monos(seed in any::<u64>()) {
        let f = sset_mono(&mut rng(seed), 6, 1);
        let (_, eq) = pp_power(&SSet, &f, 2).unwrap();
        let c = coinvariant_arrow(&SSet, &eq).unwrap();
        prop_assert_eq!(non_injective_pair(&c.arrow), None);
        let v = check_projective_cofibration(&f, 2).unwrap();
        prop_assert!(!v.pass || SSet.is_mono(&c.arrow));
    }

    /// `H₀` is free on the components.
    #[test]
    fn zeroth_homology_counts_components(seed in any::<u64>()) {
        let x = complex(&mut rng(seed), 10, 2);
        let h = sset_homology(&x, 0).unwrap();
        prop_assert!(h[0].isomorphic(&FPAbelianGroup::free(x.components())));
    }

    #[test]
    fn tensor_of_chains_is_a_complex_with_kunneth_ranks(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (c, d) = (random_free_chain(&mut r), random_free_chain(&mut r));
        let t = tensor_complex(&c, &d);
        for k in t.degrees() {
            prop_assert!(t.diff(k).mul(&t.diff(k + 1)).unwrap().is_zero());
        }
        let (hc, hd, ht) = (complex_homology_ranks(&c), complex_homology_ranks(&d), complex_homology_ranks(&t));
        for (&k, &rank) in &ht {
            let expected: usize = hc.iter().map(|(&i, &a)| a * hd.get(&(k - i)).copied().unwrap_or(0)).sum();
            prop_assert_eq!(rank, expected, "degree {}", k);
        }
        let chi: i64 = ht.iter().map(|(&k, &a)| if k % 2 == 0 { a as i64 } else { -(a as i64) }).sum();
        prop_assert_eq!(chi, t.euler_characteristic());
    }

    #[test]
    fn smith_normal_form_rechecks(rows in 1usize..6, cols in 1usize..6, seed in any::<u64>()) {
        let mut r = rng(seed);
        let m: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| r.gen_range(-9..=9)).collect()).collect();
        let a = IntMatrix::from_rows(&m);
        prop_assert!(pplab::chain::smith_normal_form(&a).verify(&a));
    }

    /// Pushout products of injections are injections, with the expected size
    /// `|B||D| - (|B|-|A|)(|D|-|C|)` of the domain.
    #[test]
    fn pp_of_injections(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, g) = (injection(&mut r, 3), injection(&mut r, 3));
        let p = pp(&FinSet, &f, &g).unwrap();
        prop_assert!(p.arrow.is_injective());
        let (a, b, c, d) = (f.table.len(), f.cod, g.table.len(), g.cod);
        prop_assert_eq!(FinSet.dom(&p.arrow).0, b * d - (b - a) * (d - c));
    }

    #[test]
    fn orbit_sizes_are_binomial_products(parts in prop::collection::vec(1usize..4, 1..3), seed in any::<u64>()) {
        let n = MultiIndex::new(parts.clone()).unwrap();
        let mut r = rng(seed);
        let k: Vec<usize> = parts.iter().map(|&p| r.gen_range(0..=p)).collect();
        let kk = MultiIndex::with_zeros(k.clone()).unwrap();
        let o = orbit(&n, &kk).unwrap();
        let expected: usize = parts.iter().zip(&k).map(|(&a, &b)| binomial(a, b)).product();
        prop_assert_eq!(o.len(), expected);
    }

    /// `Q(A ∪ B)` is the pushout of `Q(A) <- Q(A ∩ B) -> Q(B)`.
    #[test]
    fn q_preserves_unions(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = MultiIndex::new(vec![2]).unwrap();
        let (v0, v1) = injection_ladder(&mut r, 2);
        let ladder = Ladder::new(&FinSet, vec![v0], vec![v1], n.clone()).unwrap();
        let full = DCPoset::full(&n);
        let pick = |r: &mut ChaCha8Rng| full.tuples()[r.gen_range(0..full.len())].clone();
        let (a, b) = (DCPoset::down_closure(&n, &pick(&mut r)), DCPoset::down_closure(&n, &pick(&mut r)));
        let union = DCPoset::new(n.clone(), a.tuples().iter().chain(b.tuples()).cloned()).unwrap();
        let meet = DCPoset::new(n.clone(), a.tuples().iter().filter(|t| b.contains(t)).cloned()).unwrap();
        let [qa, qb, qu, qm] = [&a, &b, &union, &meet].map(|c| q_colimit(&FinSet, c, &ladder).unwrap());
        let po = FinSet.pushout(&qm.include_into(&FinSet, &qa).unwrap(), &qm.include_into(&FinSet, &qb).unwrap()).unwrap();
        let legs = [qa.include_into(&FinSet, &qu).unwrap(), qb.include_into(&FinSet, &qu).unwrap()];
        let comparison = po.induced(&FinSet, &legs, qu.object()).unwrap();
        prop_assert!(FinSet.is_iso(&comparison));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, ..ProptestConfig::default() })]

    /// Adding cells above the range leaves `H_{≤ upto}(BΣ₂)` unchanged.
    #[test]
    fn bsigma_is_stable_in_the_skeleton(upto in 0usize..4) {
        let a = bsigma_homology(2, upto + 1, upto).unwrap();
        let b = bsigma_homology(2, upto + 2, upto).unwrap();
        prop_assert!(a.iter().zip(&b).all(|(x, y)| x.isomorphic(y)));
    }

    /// Power contractions for trivial actions verify, and the contracted arrow
    /// is a homology isomorphism.
    #[test]
    fn power_contractions_verify(m in 1usize..3, k_raw in 0usize..3) {
        let k = k_raw % (m + 1);
        let n = MultiIndex::single(2).unwrap();
        let pt = pplab::sset::generate_cell(pplab::sset::CellKind::Simplex, 0, None).unwrap();
        let y = EquivariantArrow::trivial(&SSet, Arc::new(n.group()), SimplicialMap::from_empty(&pt));
        let w = build_power_contraction(&y, &[(m, k)], &n).unwrap();
        prop_assert!(verify_homotopy(&w).unwrap().pass);
    }
}

/// The sign action on `C^{⊗n}` is an action for `n ≤ 3`.
#[test]
fn sign_action_is_an_action() {
    let mut r = rng(7);
    for n in 1..=3 {
        let c = random_free_chain(&mut r);
        let act = pplab::chain::sign_action_power(&c, n).unwrap();
        act.validate(&Chain).unwrap();
        assert_eq!(act.group.order(), FinGroup::symmetric(n).unwrap().order());
    }
}

fn complex_homology_ranks(c: &ChainComplex) -> BTreeMap<i64, usize> {
    c.degrees().map(|k| (k, homology_in_degree(c, k).unwrap().rank())).collect()
}

/// Direct sums of disks and spheres in degrees 0..=2.
fn random_free_chain(r: &mut ChaCha8Rng) -> ChainComplex {
    let mut parts = Vec::new();
    for _ in 0..r.gen_range(1..=2) {
        let k = r.gen_range(0..=1);
        parts.push(if r.gen_bool(0.5) { ChainComplex::disk(k + 1) } else { ChainComplex::concentrated(k, FPAbelianGroup::free(1)) });
    }
    Chain.coproduct(&parts).0
}

/// Like [`random_free_chain`] but may carry torsion in the groups.
fn random_chain(r: &mut ChaCha8Rng) -> ChainComplex {
    if r.gen_bool(0.3) {
        ChainComplex::concentrated(r.gen_range(0..=1), FPAbelianGroup::from_invariants(0, &[r.gen_range(2..=3)]).unwrap())
    } else {
        random_free_chain(r)
    }
}

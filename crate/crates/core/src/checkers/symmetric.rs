//! Symmetroidality, power contractions, symmetric flatness, sampled
//! h-cofibration checks and the free-action test for projective cofibrations.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::verdict::{Verdict, HOMOLOGY_SURROGATE, SAMPLED_SURROGATE};
use crate::engine::{Engine, GroupAction};
use crate::error::{invalid, structural, Error, Result};
use crate::pp::{coinv_pp, coinvariant_arrow, pp_power, tensor_coinv, EquivariantArrow, MultiIndex};
use crate::sset::homotopy::{horn_contraction_rule, HomotopyWitness};
use crate::sset::{
    cell_inclusion, generate_cell, is_homology_iso, map_from_vertices, sset_product, CellKind, SSet, SimplicialMap,
    SimplicialSet,
};

/// Two cells of one dimension with the same image, if any.
pub fn non_injective_pair(f: &SimplicialMap) -> Option<(usize, usize, usize)> {
    for (k, level) in f.images.iter().enumerate() {
        let mut seen: HashMap<_, usize> = HashMap::new();
        for (i, s) in level.iter().enumerate() {
            if s.is_degenerate() {
                return Some((k, i, i));
            }
            if let Some(&j) = seen.get(&(s.base, s.id)) {
                return Some((k, j, i));
            }
            seen.insert((s.base, s.id), i);
        }
    }
    None
}

fn mono_verdict(claim: &str, f: &SimplicialMap) -> Verdict {
    match non_injective_pair(f) {
        None => Verdict::new(claim, true).witness("mono", "injective in every dimension"),
        Some((k, i, j)) if i == j => Verdict::new(claim, false).witness("collapsed cell", format!("{k}:{i}")),
        Some((k, i, j)) => Verdict::new(claim, false).witness("identified cells", format!("{k}:{i} and {k}:{j}")),
    }
}

/// `(m, k)` when `f` is the horn inclusion `Λ^m_k -> Δ^m`.
pub fn as_horn(f: &SimplicialMap) -> Option<(usize, usize)> {
    let m = f.cod.dim();
    if m == 0 || f.cod.is_empty() {
        return None;
    }
    (0..=m).find(|&k| cell_inclusion(CellKind::Horn, m, Some(k)).is_ok_and(|h| h == *f)).map(|k| (m, k))
}

/// Vertex tuples of a left-nested product, in vertex order.
fn nested_vertices(factors: &[SimplicialSet]) -> (SimplicialSet, Vec<Vec<usize>>) {
    let mut object = factors[0].clone();
    let mut tuples: Vec<Vec<usize>> = (0..object.count(0)).map(|v| vec![v]).collect();
    for x in &factors[1..] {
        let prod = sset_product(&object, x);
        tuples = prod.pairs[0]
            .iter()
            .map(|(a, b)| {
                let mut t = tuples[a.id].clone();
                t.push(b.id);
                t
            })
            .collect();
        object = prod.object;
    }
    (object, tuples)
}

/// The contraction of `y □_G v^{□n}` for a horn family `v`, parametrized by
/// `Λ = 0 -> 1 <- 2`. `Λ` acts through the diagonal `Λ -> Λ^n`.
pub fn build_power_contraction(y: &EquivariantArrow<SSet>, horns: &[(usize, usize)], n: &MultiIndex) -> Result<HomotopyWitness> {
    build_power_contraction_with(y, horns, n, |p, len| vec![p; len])
}

/// As [`build_power_contraction`] with `Λ -> Λ^n` given on vertices.
pub fn build_power_contraction_with(
    y: &EquivariantArrow<SSet>,
    horns: &[(usize, usize)],
    n: &MultiIndex,
    diagonal: impl Fn(usize, usize) -> Vec<usize>,
) -> Result<HomotopyWitness> {
    let e = SSet;
    if horns.len() != n.len() {
        return Err(invalid("one horn per block of the multi-index"));
    }
    let family = horns
        .iter()
        .map(|&(m, k)| cell_inclusion(CellKind::Horn, m, Some(k)))
        .collect::<Result<Vec<_>>>()?;
    let c = coinv_pp(&e, y, &family, n)?;
    let blocks = n.blocks();
    let simplices: Vec<SimplicialSet> = blocks.iter().map(|&b| family[b].cod.clone()).collect();
    let (p, tuples) = nested_vertices(&simplices);
    let y1 = e.cod(&y.arrow);
    let zs = sset_product(&y1, &p);
    let z = &c.equivariant.target.object;
    if zs.object != *z {
        return Err(structural("codomain is not Y₁ × (Δ^m)^n in the expected order"));
    }
    let lookup: HashMap<&Vec<usize>, usize> = tuples.iter().enumerate().map(|(v, t)| (t, v)).collect();
    let lambda = generate_cell(CellKind::TwoHornLambda, 0, None)?;
    let lp = sset_product(&lambda, &p);
    let width = blocks.len();
    let vertex_fn = lp.pairs[0]
        .iter()
        .map(|(a, b)| {
            let d = diagonal(a.id, width);
            if d.len() != width || d.iter().any(|&x| x > 2) {
                return Err(invalid("diagonal must send a vertex of Λ to a vertex of Λ^n"));
            }
            let t: Vec<usize> = (0..width)
                .map(|j| horn_contraction_rule(d[j], tuples[b.id][j], horns[blocks[j]].1))
                .collect();
            Ok(lookup[&t])
        })
        .collect::<Result<Vec<_>>>()?;
    let contract = map_from_vertices(&lp.object, &p, &vertex_fn)?;

    let lz = sset_product(&lambda, z);
    let to_p = lz.p2.then(&zs.p2)?;
    let moved = lp.pairing(&lz.p1, &to_p)?.then(&contract)?;
    let h = zs.pairing(&lz.p2.then(&zs.p1)?, &moved)?;

    let id_lambda = SimplicialMap::identity(&lambda);
    let action = &c.equivariant.target;
    for g in action.group.elements() {
        let lhs = e.tensor_mor(&id_lambda, action.act(g)).then(&h)?;
        let rhs = h.then(action.act(g))?;
        if lhs != rhs {
            return Err(Error::NotEquivariant(format!("homotopy does not commute with group element {g}")));
        }
    }
    let q = &c.target.projection;
    let map = e
        .factor_through_epi(&e.tensor_mor(&id_lambda, q), &h.then(q)?)
        .ok_or_else(|| structural("homotopy does not descend to coinvariants"))?;

    let apex: Vec<usize> = blocks.iter().map(|&b| horns[b].1).collect();
    let to_apex = SimplicialMap::constant(&p, &p, lookup[&apex])?;
    let collapse = zs.pairing(&zs.p1, &zs.p2.then(&to_apex)?)?;
    let f1 = e
        .factor_through_epi(q, &collapse.then(q)?)
        .ok_or_else(|| structural("collapse does not descend to coinvariants"))?;
    let source = c.target.object.clone();
    let image = c.arrow.image();
    Ok(HomotopyWitness {
        parameter: lambda,
        p0: 0,
        p1: 2,
        f0: SimplicialMap::identity(&source),
        f1,
        target: source.clone(),
        source,
        map,
        preserves: vec![(image.clone(), image)],
    })
}

/// Mono verdict for `y □_G s^{□n}`; with `acyclic`, also a contraction (for
/// horn families) and a homology verdict.
pub fn check_symmetroidal_instance(
    y: &EquivariantArrow<SSet>,
    family: &[SimplicialMap],
    n: &MultiIndex,
    acyclic: bool,
) -> Result<Verdict> {
    if let Some(i) = family.iter().position(|f| !f.is_mono()) {
        return Err(Error::Precondition(format!("family member {i} is not a monomorphism")));
    }
    let c = coinv_pp(&SSet, y, family, n)?;
    let mono = mono_verdict("symmetroidal", &c.arrow);
    let mut v = Verdict::new("symmetroidal", mono.pass);
    v.witnesses = mono.witnesses;
    if !acyclic {
        return Ok(v);
    }
    let horns: Option<Vec<(usize, usize)>> = family.iter().map(as_horn).collect();
    match horns {
        Some(horns) => {
            let w = build_power_contraction(y, &horns, n)?;
            let hv = crate::sset::verify_homotopy(&w)?;
            let lands = w.f1.image().is_subset_of(&c.arrow.image());
            v.pass &= hv.pass && lands;
            v = v.witness("contraction", if hv.pass { "verified" } else { "rejected" });
            v.witnesses.extend(hv.witnesses);
            if !lands {
                v = v.witness("contraction end", "does not land in the domain image");
            }
        }
        None => v = v.witness("contraction", "family is not a horn family").flag(HOMOLOGY_SURROGATE),
    }
    let hv = is_homology_iso(&c.arrow, c.arrow.cod.dim() + 1)?;
    v.pass &= hv.pass;
    v = v.witness("homology isomorphism", hv.pass.to_string());
    v.witnesses.extend(hv.witnesses);
    Ok(v)
}

/// Homology verdict for `y □_G s^{□n}` where `y` is an underlying homology isomorphism.
pub fn check_symmetric_flat_instance(
    y: &EquivariantArrow<SSet>,
    family: &[SimplicialMap],
    n: &MultiIndex,
    upto: usize,
) -> Result<Verdict> {
    if !is_homology_iso(&y.arrow, upto)?.pass {
        return Err(Error::Precondition("y is not a homology isomorphism".into()));
    }
    let c = coinv_pp(&SSet, y, family, n)?;
    let hv = is_homology_iso(&c.arrow, upto)?;
    let mut v = Verdict::new("symmetric flat", hv.pass).flag(HOMOLOGY_SURROGATE);
    v.witnesses = hv.witnesses;
    Ok(v)
}

/// A homology isomorphism out of `a`, picked at random among whiskers,
/// cylinder ends, cones on a vertex and edge collapses.
fn sample_homology_iso(rng: &mut ChaCha8Rng, a: &SimplicialSet) -> Result<(String, SimplicialMap)> {
    let e = SSet;
    if a.is_empty() {
        return Ok(("identity".into(), SimplicialMap::identity(a)));
    }
    let edges: Vec<usize> = (0..a.count(1))
        .filter(|&i| {
            let f = a.cell_faces(1, i);
            f[0].id != f[1].id
        })
        .collect();
    let kind = rng.gen_range(0..if edges.is_empty() { 3 } else { 4 });
    let point = generate_cell(CellKind::Simplex, 0, None)?;
    let v = rng.gen_range(0..a.count(0));
    let at_v = SimplicialMap::constant(&point, a, v)?;
    match kind {
        0 | 1 => {
            let m = 1 + kind;
            let simplex = generate_cell(CellKind::Simplex, m, None)?;
            let corner = SimplicialMap::constant(&point, &simplex, 0)?;
            let po = e.pushout(&at_v, &corner)?;
            Ok((format!("attach Δ^{m} at vertex {v}"), po.legs[0].clone()))
        }
        2 => {
            let interval = generate_cell(CellKind::Simplex, 1, None)?;
            let end = rng.gen_range(0..2);
            let prod = sset_product(a, &interval);
            let map = prod.pairing(&SimplicialMap::identity(a), &SimplicialMap::constant(a, &interval, end)?)?;
            Ok((format!("cylinder end {end}"), map))
        }
        _ => {
            let i = edges[rng.gen_range(0..edges.len())];
            let interval = generate_cell(CellKind::Simplex, 1, None)?;
            let f = a.cell_faces(1, i);
            let edge = map_from_vertices(&interval, a, &[f[1].id, f[0].id])?;
            let collapse = SimplicialMap::constant(&interval, &point, 0)?;
            let po = e.pushout(&edge, &collapse)?;
            Ok((format!("collapse edge {i}"), po.legs[0].clone()))
        }
    }
}

/// Pushouts of sampled homology isomorphisms along `t` stay homology
/// isomorphisms, and `t` is mono.
pub fn check_h_cofibration_sampled(t: &SimplicialMap, seed: u64, samples: usize) -> Result<Verdict> {
    let e = SSet;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mono = mono_verdict("mono", t);
    let mut v = Verdict::new("symmetric h-cofibration", mono.pass).flag(SAMPLED_SURROGATE);
    v.witnesses = mono.witnesses;
    v = v.witness("seed", seed.to_string()).witness("samples", samples.to_string());
    for s in 0..samples {
        let (label, w) = sample_homology_iso(&mut rng, &t.dom)?;
        let upto = w.cod.dim() + 1;
        if !is_homology_iso(&w, upto)?.pass {
            return Err(structural(format!("sample {s} ({label}) is not a homology isomorphism")));
        }
        let po = e.pushout(t, &w)?;
        let pushed = &po.legs[0];
        if !is_homology_iso(pushed, pushed.cod.dim().max(upto) + 1)?.pass {
            v.pass = false;
            v = v.witness("failing pushout", format!("sample {s}: {label}"));
        }
    }
    Ok(v)
}

/// `(Y ⊗ s^{□n})_G` checked by [`check_h_cofibration_sampled`].
pub fn check_symmetric_h_instance(
    y: &GroupAction<SSet>,
    family: &[SimplicialMap],
    n: &MultiIndex,
    seed: u64,
    samples: usize,
) -> Result<Verdict> {
    let c = tensor_coinv(&SSet, y, family, n)?;
    check_h_cofibration_sampled(&c.arrow, seed, samples)
}

/// Whether `Σn` acts freely on the nondegenerate cells of the codomain of
/// `f^{□n}` outside the image. A fixed cell is reported as the witness.
pub fn check_projective_cofibration(f: &SimplicialMap, n: usize) -> Result<Verdict> {
    if !f.is_mono() {
        return Err(Error::Precondition("arrow is not a monomorphism".into()));
    }
    let (p, eq) = pp_power(&SSet, f, n)?;
    let image = p.arrow.image();
    let action = &eq.target;
    let id = action.group.identity();
    let cod = &action.object;
    let mut v = Verdict::new("projective cofibration", true);
    'cells: for s in cod.all_nondegenerate() {
        if image.contains(&s) {
            continue;
        }
        for g in action.group.elements().filter(|&g| g != id) {
            if *action.act(g).image_of(s.base, s.id) == s {
                v.pass = false;
                v = v
                    .witness("fixed cell", format!("{}:{}", s.base, s.id))
                    .witness("fixed cell vertices", format!("{:?}", cod.vertices(&s)))
                    .witness("group element", format!("{:?}", action.group.perm(g)));
                break 'cells;
            }
        }
    }
    let coinv = coinvariant_arrow(&SSet, &eq)?;
    let sym = mono_verdict("symmetrizable", &coinv.arrow);
    v = v.witness("coinvariant arrow mono", sym.pass.to_string());
    Ok(v)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::engine::FinGroup;
    use crate::sset::verify_homotopy;

    fn point() -> SimplicialSet {
        generate_cell(CellKind::Simplex, 0, None).unwrap()
    }

    fn from_empty_to_point(n: &MultiIndex) -> EquivariantArrow<SSet> {
        EquivariantArrow::trivial(&SSet, Arc::new(n.group()), SimplicialMap::from_empty(&point()))
    }

    #[test]
    fn horn_detection() {
        assert_eq!(as_horn(&cell_inclusion(CellKind::Horn, 2, Some(1)).unwrap()), Some((2, 1)));
        assert_eq!(as_horn(&cell_inclusion(CellKind::Horn, 1, Some(0)).unwrap()), Some((1, 0)));
        assert_eq!(as_horn(&cell_inclusion(CellKind::Boundary, 2, None).unwrap()), None);
    }

    #[test]
    fn single_factor_contraction_is_the_horn_contraction() {
        let n = MultiIndex::single(1).unwrap();
        let w = build_power_contraction(&from_empty_to_point(&n), &[(2, 0)], &n).unwrap();
        assert!(verify_homotopy(&w).unwrap().pass);
        assert_eq!(w.source.counts(), vec![3, 3, 1]);
        // Δ⁰ × Δ² is Δ², and the far end is the constant map at vertex 0
        assert!(w.f1.images[0].iter().all(|s| s.id == 0));
    }

    #[test]
    fn square_power_contraction() {
        let n = MultiIndex::single(2).unwrap();
        let w = build_power_contraction(&from_empty_to_point(&n), &[(2, 1)], &n).unwrap();
        assert!(verify_homotopy(&w).unwrap().pass);
    }

    #[test]
    fn skewed_diagonal_is_rejected() {
        let n = MultiIndex::single(2).unwrap();
        let r = build_power_contraction_with(&from_empty_to_point(&n), &[(1, 0)], &n, |p, len| {
            let mut d = vec![0; len];
            d[0] = p;
            d
        });
        assert!(matches!(r, Err(Error::NotEquivariant(_))), "{r:?}");
    }

    #[test]
    fn symmetroidal_with_contraction() {
        let n = MultiIndex::single(2).unwrap();
        let horn = cell_inclusion(CellKind::Horn, 2, Some(1)).unwrap();
        let v = check_symmetroidal_instance(&from_empty_to_point(&n), &[horn], &n, true).unwrap();
        assert!(v.pass, "{v:?}");
        assert_eq!(v.detail("contraction"), Some("verified"));
    }

    #[test]
    fn boundary_with_trivial_action_stays_mono() {
        let n = MultiIndex::single(2).unwrap();
        let b = cell_inclusion(CellKind::Boundary, 1, None).unwrap();
        let y = EquivariantArrow::trivial(&SSet, Arc::new(n.group()), b.clone());
        assert!(check_symmetroidal_instance(&y, &[b], &n, false).unwrap().pass);
    }

    #[test]
    fn identity_arrow_absorbs() {
        let n = MultiIndex::single(2).unwrap();
        let y = EquivariantArrow::trivial(&SSet, Arc::new(n.group()), SimplicialMap::identity(&point()));
        let b = cell_inclusion(CellKind::Boundary, 1, None).unwrap();
        let v = check_symmetroidal_instance(&y, &[b], &n, false).unwrap();
        assert!(v.pass);
    }

    #[test]
    fn non_mono_family_is_rejected() {
        let n = MultiIndex::single(2).unwrap();
        let d1 = generate_cell(CellKind::Simplex, 1, None).unwrap();
        let collapse = SimplicialMap::constant(&d1, &point(), 0).unwrap();
        assert!(matches!(
            check_symmetroidal_instance(&from_empty_to_point(&n), &[collapse], &n, false),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn boundary_square_is_not_projective() {
        let b = cell_inclusion(CellKind::Boundary, 1, None).unwrap();
        let v = check_projective_cofibration(&b, 2).unwrap();
        assert!(!v.pass);
        assert_eq!(v.detail("fixed cell vertices"), Some("[0, 3]"));
        assert_eq!(v.detail("coinvariant arrow mono"), Some("true"));
        assert!(check_projective_cofibration(&b, 1).unwrap().pass);
    }

    #[test]
    fn sampled_h_cofibration() {
        let n = MultiIndex::single(2).unwrap();
        let b = cell_inclusion(CellKind::Boundary, 1, None).unwrap();
        let unit = GroupAction::trivial(&SSet, Arc::new(FinGroup::symmetric(2).unwrap()), point());
        let v = check_symmetric_h_instance(&unit, &[b], &n, 7, 12).unwrap();
        assert!(v.pass, "{v:?}");
        assert!(v.flags.iter().any(|f| f == SAMPLED_SURROGATE));
        let d1 = generate_cell(CellKind::Simplex, 1, None).unwrap();
        let collapse = SimplicialMap::constant(&d1, &point(), 0).unwrap();
        assert!(!check_h_cofibration_sampled(&collapse, 7, 10).unwrap().pass);
    }
}

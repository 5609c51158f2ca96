//! Replayable certificates for the decomposition of `(v₁v₀)^{□n}` and of
//! `κ : □ⁿ(v₁v₀) ⊔_{□ⁿv₀} X₁^{⊗n} -> X₂^{⊗n}` into pushouts of the `m_k`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::mk::mk_map;
use super::{orbit, q_colimit, DCPoset, Ladder, QColimit, Tuple};
use crate::checkers::Verdict;
use crate::engine::serial::{digest, Serial};
use crate::engine::Engine;
use crate::error::{invalid, structural, Result};
use crate::pp::{pp_family, pp_map, pp_permuted, ArrowSquare, MultiIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `(v₁v₀)^{□n}`: steps for every `0 ≤ k ≤ n`.
    Full,
    /// `κ`: steps for every `k ≠ 0`.
    Kappa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Realization {
    /// Every stage is compared as a set of cells of `X₂^{⊗n}`.
    Mono,
    Abstract,
}

type Cells = BTreeSet<(usize, usize)>;

#[derive(Debug, Clone)]
pub struct FiltrationStep<E: Engine> {
    pub k: MultiIndex,
    pub orbit: Vec<Tuple>,
    pub m_k: E::Mor,
    pub coset_count: usize,
    /// `⊔_o Q(C_o) -> Q(stage before)`.
    pub attaching: E::Mor,
    /// `⊔_o Q(C_o) -> ⊔_o Q(D_o)`.
    pub cells: E::Mor,
    /// `Q(stage before) -> Q(stage after)`.
    pub inclusion: E::Mor,
    pub stage: E::Obj,
    pub cocartesian: bool,
    /// Each `Q(C_o -> D_o)` matches `v₀^{□(n-k)} □ v₁^{□k}` up to a place
    /// permutation, and the orbits match the cosets.
    pub identifies_with_m_k: bool,
    /// Mono mode: the stage, `Q(C_o)` and `Q(D_o)` as cells of `X₂^{⊗n}`,
    /// checked to form a union along the old stage.
    pub stage_cells: Option<Cells>,
    pub union_criterion: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct FiltrationCertificate<E: Engine> {
    pub ladder: Ladder<E>,
    pub mode: Mode,
    pub realization: Realization,
    pub start: E::Obj,
    pub steps: Vec<FiltrationStep<E>>,
    pub final_object: E::Obj,
    /// The composite of all stage inclusions.
    pub final_arrow: E::Mor,
}

impl<E: Engine> FiltrationCertificate<E> {
    /// The last stage as cells of `X₂^{⊗n}` (mono mode only).
    pub fn final_cells(&self) -> Option<&BTreeSet<(usize, usize)>> {
        self.steps.last().and_then(|s| s.stage_cells.as_ref())
    }
}

enum StepOutcome<E: Engine> {
    Done(Box<FiltrationStep<E>>, DCPoset, QColimit<E>),
    Mismatch(String),
}

fn to_top<E: Engine>(engine: &E, ladder: &Ladder<E>, q: &QColimit<E>) -> Result<E::Mor> {
    let top = vec![2u8; ladder.n.total()];
    let target = ladder.label(engine, &top);
    q.induce(engine, &target, |t| ladder.label_map(engine, t, &top))
}

fn realized<E: Engine>(engine: &E, ladder: &Ladder<E>, q: &QColimit<E>) -> Result<Option<Cells>> {
    let m = to_top(engine, ladder, q)?;
    Ok(if engine.is_mono(&m) { engine.image_cells(&m) } else { None })
}

/// Factor of the ladder at each slot for an orbit tuple over `{1,2}`.
fn factors_at<E: Engine>(ladder: &Ladder<E>, o: &[u8]) -> Vec<E::Mor> {
    o.iter()
        .zip(ladder.n.blocks())
        .map(|(&x, b)| if x == 1 { ladder.v0[b].clone() } else { ladder.v1[b].clone() })
        .collect()
}

fn identify<E: Engine>(engine: &E, ladder: &Ladder<E>, k: &MultiIndex, orbit: &[Tuple], qc: &[QColimit<E>], qd: &[QColimit<E>]) -> Result<(E::Mor, usize, bool)> {
    let mk = mk_map(engine, ladder, k)?;
    let mut ok = mk.coset_count() == orbit.len();
    if let Some((s, t)) = &mk.induced {
        ok &= engine.is_iso(&s.comparison) && engine.is_iso(&t.comparison);
    }
    let n = &ladder.n;
    let blocks = n.blocks();
    let rest = n.minus(k).expect("k ≤ n");
    for (idx, o) in orbit.iter().enumerate() {
        let factors = factors_at(ladder, o);
        let p_o = pp_family(engine, &factors)?;
        let lift = |t: &[u8]| -> Tuple { t.iter().zip(o).map(|(&x, &y)| if y == 2 { x.max(1) } else { x }).collect() };
        let top = qc[idx].induce(engine, p_o.domain(), |t| {
            let up = lift(t);
            let mask = up.iter().zip(o).enumerate().fold(0u32, |m, (p, (&x, &y))| m | (u32::from(x == y) << p));
            engine.compose(p_o.corner_leg(mask)?, &ladder.label_map(engine, t, &up)?)
        })?;
        let bottom = qd[idx].induce(engine, &engine.cod(&p_o.arrow), |t| ladder.label_map(engine, t, o))?;
        let inclusion = qc[idx].include_into(engine, &qd[idx])?;
        let sq = ArrowSquare { source: inclusion, target: p_o.arrow.clone(), top, bottom };
        ok &= sq.is_isomorphism(engine)?;
        // slot -> position among the factors of v₀^{□(n-k)} □ v₁^{□k}
        let mut next_v0: Vec<usize> = Vec::with_capacity(n.len());
        let mut next_v1: Vec<usize> = Vec::with_capacity(n.len());
        let (mut a, mut b) = (0, rest.total());
        for i in 0..n.len() {
            next_v0.push(a);
            next_v1.push(b);
            a += rest.parts()[i];
            b += k.parts()[i];
        }
        let perm: Vec<usize> = o
            .iter()
            .zip(&blocks)
            .map(|(&x, &blk)| {
                let slot = if x == 1 { &mut next_v0[blk] } else { &mut next_v1[blk] };
                *slot += 1;
                *slot - 1
            })
            .collect();
        ok &= pp_permuted(engine, &p_o, &mk.product, &perm)?.is_isomorphism(engine)?;
    }
    let cosets = mk.coset_count();
    Ok((mk.arrow, cosets, ok))
}

fn replay_step<E: Engine>(
    engine: &E,
    ladder: &Ladder<E>,
    realization: Realization,
    stage: &DCPoset,
    before: &QColimit<E>,
    before_cells: Option<&Cells>,
    k: &MultiIndex,
) -> Result<StepOutcome<E>> {
    let n = &ladder.n;
    let orbit = orbit(n, k)?;
    let mut cs = Vec::with_capacity(orbit.len());
    let mut ds = Vec::with_capacity(orbit.len());
    for o in &orbit {
        if stage.contains(o) {
            return Ok(StepOutcome::Mismatch(format!("{o:?} is already present")));
        }
        let d = DCPoset::down_closure(n, o);
        let c = d.without(o)?;
        if !c.is_subset_of(stage) {
            let missing = c.tuples().iter().find(|t| !stage.contains(t)).expect("not a subset");
            return Ok(StepOutcome::Mismatch(format!("{o:?} is attached before {missing:?}")));
        }
        cs.push(c);
        ds.push(d);
    }
    let after_poset = stage.with(&orbit)?;
    let after = q_colimit(engine, &after_poset, ladder)?;
    let qc = cs.iter().map(|c| q_colimit(engine, c, ladder)).collect::<Result<Vec<_>>>()?;
    let qd = ds.iter().map(|d| q_colimit(engine, d, ladder)).collect::<Result<Vec<_>>>()?;

    let (d_sum, d_inj) = engine.coproduct(&qd.iter().map(|q| q.object().clone()).collect::<Vec<_>>());
    let mu_legs = qc
        .iter()
        .zip(&qd)
        .zip(&d_inj)
        .map(|((c, d), inj)| engine.compose(inj, &c.include_into(engine, d)?))
        .collect::<Result<Vec<_>>>()?;
    let cells = engine.copair(&mu_legs, &d_sum)?;
    let alpha_legs = qc.iter().map(|c| c.include_into(engine, before)).collect::<Result<Vec<_>>>()?;
    let attaching = engine.copair(&alpha_legs, before.object())?;
    let inclusion = before.include_into(engine, &after)?;

    let po = engine.pushout(&cells, &attaching)?;
    let d_into = qd.iter().map(|d| d.include_into(engine, &after)).collect::<Result<Vec<_>>>()?;
    let d_into = engine.copair(&d_into, after.object())?;
    let gap = po
        .induced(engine, &[d_into, inclusion.clone()], after.object())
        .ok_or_else(|| structural("stage maps do not agree on the attached cells"))?;
    let cocartesian = engine.is_iso(&gap);

    let (m_k, coset_count, identifies_with_m_k) = identify(engine, ladder, k, &orbit, &qc, &qd)?;

    let (stage_cells, union_criterion) = match (realization, before_cells) {
        (Realization::Mono, Some(old)) => {
            let after_cells = realized(engine, ladder, &after)?;
            let c_cells = qc.iter().map(|q| realized(engine, ladder, q)).collect::<Result<Option<Vec<_>>>>()?;
            let d_cells = qd.iter().map(|q| realized(engine, ladder, q)).collect::<Result<Option<Vec<_>>>>()?;
            let ok = match (&after_cells, c_cells, d_cells) {
                (Some(a), Some(c), Some(d)) => union_holds(old, a, &c, &d),
                _ => false,
            };
            (after_cells, Some(ok))
        }
        _ => (None, None),
    };
    let step = FiltrationStep {
        k: k.clone(),
        orbit,
        m_k,
        coset_count,
        attaching,
        cells,
        inclusion,
        stage: after.object().clone(),
        cocartesian,
        identifies_with_m_k,
        stage_cells,
        union_criterion,
    };
    Ok(StepOutcome::Done(Box::new(step), after_poset, after))
}

/// `S' = S ∪ ⋃ D_o`, `D_o ∩ S = C_o`, and the `D_o \ C_o` pairwise disjoint.
fn union_holds(old: &Cells, new: &Cells, c: &[Cells], d: &[Cells]) -> bool {
    let mut union = old.clone();
    for di in d {
        union.extend(di.iter().copied());
    }
    if union != *new {
        return false;
    }
    if c.iter().zip(d).any(|(ci, di)| di.intersection(old).copied().collect::<Cells>() != *ci) {
        return false;
    }
    let mut seen = Cells::new();
    for (ci, di) in c.iter().zip(d) {
        for cell in di.difference(ci) {
            if !seen.insert(*cell) {
                return false;
            }
        }
    }
    true
}

/// The stages before the first step.
fn start_poset(n: &MultiIndex, mode: Mode) -> Result<DCPoset> {
    let base = DCPoset::with_a_zero(n);
    match mode {
        Mode::Full => Ok(base),
        Mode::Kappa => base.with(&[vec![1u8; n.total()]]),
    }
}

/// Indices `k` in lexicographic order, which refines the componentwise order.
pub fn canonical_order(n: &MultiIndex, mode: Mode) -> Vec<MultiIndex> {
    n.below().into_iter().filter(|k| mode == Mode::Full || !k.is_zero()).collect()
}

fn choose_realization<E: Engine>(engine: &E, ladder: &Ladder<E>) -> Realization {
    let all_mono = ladder.v0.iter().chain(&ladder.v1).all(|f| engine.is_mono(f));
    let probe = ladder.v0.first().and_then(|f| engine.image_cells(f));
    if all_mono && probe.is_some() {
        Realization::Mono
    } else {
        Realization::Abstract
    }
}

struct Replay<E: Engine> {
    start: QColimit<E>,
    start_cells: Option<Cells>,
    steps: Vec<FiltrationStep<E>>,
    stage: DCPoset,
    last: QColimit<E>,
    composite: E::Mor,
    mismatch: Option<(String, String)>,
}

fn replay<E: Engine>(engine: &E, ladder: &Ladder<E>, mode: Mode, realization: Realization, order: &[MultiIndex]) -> Result<Replay<E>> {
    let mut stage = start_poset(&ladder.n, mode)?;
    let start = q_colimit(engine, &stage, ladder)?;
    let start_cells = match realization {
        Realization::Mono => realized(engine, ladder, &start)?,
        Realization::Abstract => None,
    };
    let mut current = start.clone();
    let mut cells = start_cells.clone();
    let mut composite = engine.identity(start.object());
    let mut steps = Vec::with_capacity(order.len());
    let mut mismatch = None;
    for k in order {
        match replay_step(engine, ladder, realization, &stage, &current, cells.as_ref(), k)? {
            StepOutcome::Mismatch(why) => {
                mismatch = Some((k.to_string(), why));
                break;
            }
            StepOutcome::Done(step, next_stage, next) => {
                composite = engine.compose(&step.inclusion, &composite)?;
                cells = step.stage_cells.clone();
                steps.push(*step);
                stage = next_stage;
                current = next;
            }
        }
    }
    Ok(Replay { start, start_cells, steps, stage, last: current, composite, mismatch })
}

fn build<E: Engine>(engine: &E, ladder: Ladder<E>, mode: Mode) -> Result<FiltrationCertificate<E>> {
    let realization = choose_realization(engine, &ladder);
    let order = canonical_order(&ladder.n, mode);
    let r = replay(engine, &ladder, mode, realization, &order)?;
    if let Some((k, why)) = r.mismatch {
        return Err(structural(format!("canonical order fails at {k}: {why}")));
    }
    Ok(FiltrationCertificate {
        mode,
        realization,
        start: r.start.object().clone(),
        steps: r.steps,
        final_object: r.last.object().clone(),
        final_arrow: r.composite,
        ladder,
    })
}

pub fn decompose_composite_power<E: Engine>(engine: &E, v0: &[E::Mor], v1: &[E::Mor], n: &MultiIndex) -> Result<FiltrationCertificate<E>> {
    build(engine, Ladder::new(engine, v0.to_vec(), v1.to_vec(), n.clone())?, Mode::Full)
}

pub fn decompose_kappa<E: Engine>(engine: &E, v0: &[E::Mor], v1: &[E::Mor], n: &MultiIndex) -> Result<FiltrationCertificate<E>> {
    build(engine, Ladder::new(engine, v0.to_vec(), v1.to_vec(), n.clone())?, Mode::Kappa)
}

/// The directly computed target with the canonical map from its domain to
/// the start stage.
fn direct_target<E: Engine>(engine: &E, ladder: &Ladder<E>, mode: Mode, start: &QColimit<E>) -> Result<(E::Mor, E::Mor)> {
    let n = &ladder.n;
    let blocks = n.blocks();
    let w = ladder.composites(engine)?;
    let w_factors: Vec<E::Mor> = blocks.iter().map(|&b| w[b].clone()).collect();
    let pw = pp_family(engine, &w_factors)?;
    let into_start = |target: &E::Obj| {
        pw.induce_from_corners(engine, target, |mask| {
            let t: Tuple = (0..blocks.len()).map(|p| if mask >> p & 1 == 1 { 2 } else { 0 }).collect();
            start.leg(&t).cloned()
        })
    };
    match mode {
        Mode::Full => Ok((pw.arrow.clone(), into_start(start.object())?)),
        Mode::Kappa => {
            let v0_factors: Vec<E::Mor> = blocks.iter().map(|&b| ladder.v0[b].clone()).collect();
            let p0 = pp_family(engine, &v0_factors)?;
            let squares = blocks
                .iter()
                .map(|&b| {
                    let x0 = engine.dom(&ladder.v0[b]);
                    ArrowSquare::new(engine, ladder.v0[b].clone(), w[b].clone(), engine.identity(&x0), ladder.v1[b].clone())
                })
                .collect::<Result<Vec<_>>>()?;
            let c = pp_map(engine, &p0, &pw, &squares)?;
            let po = engine.pushout(&c.top, &p0.arrow)?;
            let v1s: Vec<E::Mor> = blocks.iter().map(|&b| ladder.v1[b].clone()).collect();
            let top = vec![2u8; blocks.len()];
            let kappa = po
                .induced(engine, &[pw.arrow.clone(), engine.tensor_mor_many(&v1s)], &ladder.label(engine, &top))
                .ok_or_else(|| structural("κ legs disagree"))?;
            let ones = vec![1u8; blocks.len()];
            let comparison = po
                .induced(engine, &[into_start(start.object())?, start.leg(&ones)?.clone()], start.object())
                .ok_or_else(|| structural("comparison legs disagree"))?;
            Ok((kappa, comparison))
        }
    }
}

/// Replays the certificate and checks every recorded stage, every square,
/// the step count and the final arrow.
pub fn verify_certificate<E: Engine>(engine: &E, c: &FiltrationCertificate<E>) -> Result<Verdict> {
    let order: Vec<MultiIndex> = c.steps.iter().map(|s| s.k.clone()).collect();
    let r = replay(engine, &c.ladder, c.mode, c.realization, &order)?;
    let mut v = Verdict::new("filtration certificate", true);
    let fail = |v: Verdict, label: &str, detail: String| -> Verdict {
        let mut v = v.witness(label, detail);
        v.pass = false;
        v
    };
    if let Some((k, why)) = &r.mismatch {
        v = fail(v, "stage mismatch at k", format!("k = {k}: {why}"));
    }
    for (recorded, replayed) in c.steps.iter().zip(&r.steps) {
        let k = &recorded.k;
        if recorded.orbit != replayed.orbit
            || !engine.same_object(&recorded.stage, &replayed.stage)
            || !engine.equal_morphisms(&recorded.attaching, &replayed.attaching)
        {
            v = fail(v, "stage mismatch at k", format!("k = {k}: recorded stage differs from the replay"));
        }
        if !replayed.cocartesian {
            v = fail(v, "square not cocartesian", format!("k = {k}"));
        }
        if !replayed.identifies_with_m_k {
            v = fail(v, "attached map is not m_k", format!("k = {k}"));
        }
        if replayed.union_criterion == Some(false) {
            v = fail(v, "stage is not the union", format!("k = {k}"));
        }
    }
    if r.mismatch.is_none() && r.stage != DCPoset::full(&c.ladder.n) {
        v = fail(v, "stage mismatch at k", format!("after k = {}: final stage misses tuples", order.last().map(|k| k.to_string()).unwrap_or_default()));
    }
    let expected = match c.mode {
        Mode::Full => c.ladder.n.box_count(),
        Mode::Kappa => c.ladder.n.box_count() - 1,
    };
    if c.steps.len() != expected {
        v = fail(v, "step count", format!("{} steps, expected {expected}", c.steps.len()));
    }
    if v.pass {
        let (direct, comparison) = direct_target(engine, &c.ladder, c.mode, &r.start)?;
        let top_tuple = vec![2u8; c.ladder.n.total()];
        let bottom = r.last.leg(&top_tuple)?.clone();
        let sq = ArrowSquare { source: direct.clone(), target: r.composite.clone(), top: comparison, bottom };
        if !sq.is_isomorphism(engine)? {
            v = fail(v, "final arrow", "replayed composite is not isomorphic to the direct computation".into());
        }
        if !engine.equal_morphisms(&c.final_arrow, &r.composite) {
            v = fail(v, "final arrow", "recorded composite differs from the replay".into());
        }
        if c.realization == Realization::Mono {
            let direct_cells = engine.image_cells(&direct);
            if r.start_cells.is_none() || direct_cells != r.start_cells {
                v = fail(v, "final arrow", "start stage and direct domain are different subobjects".into());
            }
        }
    }
    if v.pass {
        v = v.witness("steps", c.steps.len().to_string());
    }
    Ok(v)
}

impl<E: Engine + Serial> FiltrationCertificate<E> {
    pub fn to_json(&self, engine: &E) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| {
                json!({
                    "k": s.k.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "orbit": s.orbit.iter().map(|t| t.iter().map(|x| x.to_string()).collect::<String>()).collect::<Vec<_>>(),
                    "orbit_size": s.orbit.len().to_string(),
                    "cosets": s.coset_count.to_string(),
                    "attaching": engine.mor_json(&s.attaching),
                    "stage_digest": digest(&engine.obj_json(&s.stage)),
                    "cocartesian": s.cocartesian,
                })
            })
            .collect();
        json!({
            "engine": engine.tag().to_string(),
            "n": self.ladder.n.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "mode": self.mode,
            "realization": self.realization,
            "inputs": {
                "v0": self.ladder.v0.iter().map(|f| engine.mor_json(f)).collect::<Vec<_>>(),
                "v1": self.ladder.v1.iter().map(|f| engine.mor_json(f)).collect::<Vec<_>>(),
            },
            "steps": steps,
            "final_digest": digest(&engine.obj_json(&self.final_object)),
        })
    }

    /// Rebuilds a certificate from its JSON form by replaying the recorded
    /// order, then checks the recorded attaching maps and digests against the replay.
    pub fn verify_json(engine: &E, v: &Value) -> Result<Verdict> {
        let parse_list = |key: &str| -> Result<Vec<E::Mor>> {
            v["inputs"][key]
                .as_array()
                .ok_or_else(|| invalid(format!("inputs.{key} must be a list")))?
                .iter()
                .map(|m| engine.mor_from_json(m))
                .collect()
        };
        let parse_index = |x: &Value| -> Result<Vec<usize>> {
            x.as_array()
                .ok_or_else(|| invalid("multi-index must be a list"))?
                .iter()
                .map(|p| p.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| invalid("bad multi-index entry")))
                .collect()
        };
        let n = MultiIndex::new(parse_index(&v["n"])?)?;
        let mode: Mode = serde_json::from_value(v["mode"].clone()).map_err(|e| invalid(e.to_string()))?;
        let ladder = Ladder::new(engine, parse_list("v0")?, parse_list("v1")?, n)?;
        let steps = v["steps"].as_array().ok_or_else(|| invalid("steps must be a list"))?;
        let order = steps
            .iter()
            .map(|s| MultiIndex::with_zeros(parse_index(&s["k"])?))
            .collect::<Result<Vec<_>>>()?;
        let realization = choose_realization(engine, &ladder);
        let r = replay(engine, &ladder, mode, realization, &order)?;
        let rebuilt = FiltrationCertificate {
            mode,
            realization,
            start: r.start.object().clone(),
            final_object: r.last.object().clone(),
            final_arrow: r.composite.clone(),
            steps: r.steps,
            ladder,
        };
        let mut verdict = verify_certificate(engine, &rebuilt)?;
        let replayed = rebuilt.to_json(engine);
        for (i, (a, b)) in steps.iter().zip(replayed["steps"].as_array().into_iter().flatten()).enumerate() {
            if a["attaching"] != b["attaching"] || a["stage_digest"] != b["stage_digest"] {
                verdict = verdict.witness("stage mismatch at k", format!("step {i}: recorded data differs from the replay"));
                verdict.pass = false;
            }
        }
        if r.mismatch.is_none() && v["final_digest"] != replayed["final_digest"] {
            verdict = verdict.witness("final arrow", "final digest differs".to_string());
            verdict.pass = false;
        }
        Ok(verdict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{FinSet, FinSetMap, FinSetObj};

    fn one_into_two() -> FinSetMap {
        FinSetMap::new(2, vec![0]).unwrap()
    }

    fn two_into_three() -> FinSetMap {
        FinSetMap::new(3, vec![0, 1]).unwrap()
    }

    #[test]
    fn single_block_of_one() {
        let e = FinSet;
        let n = MultiIndex::single(1).unwrap();
        let c = decompose_composite_power(&e, &[one_into_two()], &[FinSetMap::new(3, vec![0, 2]).unwrap()], &n).unwrap();
        assert_eq!(c.steps.len(), 2);
        assert_eq!(c.realization, Realization::Mono);
        let v = verify_certificate(&e, &c).unwrap();
        assert!(v.pass, "{v:?}");
        let k = decompose_kappa(&e, &[one_into_two()], &[FinSetMap::new(3, vec![0, 2]).unwrap()], &n).unwrap();
        assert_eq!(k.steps.len(), 1);
        assert!(verify_certificate(&e, &k).unwrap().pass);
    }

    #[test]
    fn squares_of_injections() {
        let e = FinSet;
        let n = MultiIndex::single(2).unwrap();
        let c = decompose_composite_power(&e, &[one_into_two()], &[two_into_three()], &n).unwrap();
        assert_eq!(c.steps.len(), 3);
        assert_eq!(c.steps[1].orbit, vec![vec![1, 2], vec![2, 1]]);
        assert!(c.steps.iter().all(|s| s.cocartesian && s.identifies_with_m_k && s.union_criterion == Some(true)));
        assert!(verify_certificate(&e, &c).unwrap().pass);
        let k = decompose_kappa(&e, &[one_into_two()], &[two_into_three()], &n).unwrap();
        assert_eq!(k.final_object, FinSetObj(9));
        assert!(verify_certificate(&e, &k).unwrap().pass);
    }

    #[test]
    fn deleted_step_is_caught() {
        let e = FinSet;
        let n = MultiIndex::single(2).unwrap();
        let mut c = decompose_composite_power(&e, &[one_into_two()], &[two_into_three()], &n).unwrap();
        c.steps.remove(1);
        let v = verify_certificate(&e, &c).unwrap();
        assert!(!v.pass);
        assert!(v.detail("stage mismatch at k").is_some());
        let mut c = decompose_composite_power(&e, &[one_into_two()], &[two_into_three()], &n).unwrap();
        c.steps.pop();
        let v = verify_certificate(&e, &c).unwrap();
        assert!(v.detail("stage mismatch at k").is_some());
    }

    #[test]
    fn two_blocks_and_json() {
        let e = FinSet;
        let n = MultiIndex::new(vec![2, 1]).unwrap();
        let v0 = [one_into_two(), FinSetMap::new(2, vec![1]).unwrap()];
        let v1 = [FinSetMap::new(3, vec![2, 0]).unwrap(), FinSetMap::new(2, vec![1, 0]).unwrap()];
        let c = decompose_composite_power(&e, &v0, &v1, &n).unwrap();
        assert_eq!(c.steps.len(), 6);
        assert!(verify_certificate(&e, &c).unwrap().pass);
        let json = c.to_json(&e);
        assert!(FiltrationCertificate::<FinSet>::verify_json(&e, &json).unwrap().pass);
        let mut tampered = json.clone();
        tampered["steps"].as_array_mut().unwrap().remove(2);
        assert!(!FiltrationCertificate::<FinSet>::verify_json(&e, &tampered).unwrap().pass);
    }
}

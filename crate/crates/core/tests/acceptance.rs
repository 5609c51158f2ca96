//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//! Every comparison is exact; there are no numeric tolerances.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pplab::checkers::random::{injection_ladder, sset_ladder};
use pplab::checkers::symmetric::non_injective_pair;
use pplab::checkers::topology::homology_through;
use pplab::checkers::{
    bsigma_homology, chain_counterexample_report, check_projective_cofibration, check_symmetroidal_instance,
    strict_vs_homotopy_pushout, Verdict,
};
use pplab::cli::suites::{
    default_filtration_indices, law_verdicts, random_finset_laws, random_sset_laws, small_horns, symmetroidal_ys,
};
use pplab::cli::{run_named, SuiteConfig};
use pplab::engine::{Engine, FinSet, FinSetMap};
use pplab::filtration::{decompose_composite_power, decompose_kappa, verify_certificate, FiltrationCertificate};
use pplab::pp::{coinvariant_arrow, pp_power, MultiIndex};
use pplab::sset::{
    cell_inclusion, esigma_skeleton, generate_cell, sset_product, CellKind, SSet, Simplex, SimplicialMap,
    SimplicialSet,
};

const SEED: u64 = 42;

type Outcome = Result<(), Vec<String>>;
type Criterion = (&'static str, fn() -> Outcome);

fn collect(problems: Vec<String>) -> Outcome {
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems)
    }
}

fn failed(v: &Verdict) -> String {
    let w: Vec<String> = v.witnesses.iter().map(|w| format!("{}: {}", w.label, w.detail)).collect();
    format!("{} [{}]", v.claim, w.join("; "))
}

fn product_of_successors(n: &MultiIndex) -> usize {
    n.parts().iter().map(|&k| k + 1).product()
}

/// Replays both certificates, checks step counts against `∏(nᵢ+1)` and the
/// final object against the tensor power of the top objects.
fn check_filtration<E: Engine + pplab::engine::serial::Serial>(
    e: &E,
    v0: &[E::Mor],
    v1: &[E::Mor],
    n: &MultiIndex,
    top_size: impl Fn(&E::Obj) -> i64,
    label: &str,
    problems: &mut Vec<String>,
) {
    let top_factors: Vec<E::Obj> = n
        .parts()
        .iter()
        .zip(v1)
        .flat_map(|(&k, f)| std::iter::repeat_n(e.cod(f), k))
        .collect();
    let expected_size: i64 = top_factors.iter().map(&top_size).product();
    let built: Vec<(&str, pplab::error::Result<FiltrationCertificate<E>>, usize)> = vec![
        ("full", decompose_composite_power(e, v0, v1, n), product_of_successors(n)),
        ("kappa", decompose_kappa(e, v0, v1, n), product_of_successors(n) - 1),
    ];
    for (mode, c, steps) in built {
        let c = match c {
            Ok(c) => c,
            Err(err) => {
                problems.push(format!("{label} {mode}: {err}"));
                continue;
            }
        };
        match verify_certificate(e, &c) {
            Ok(v) if v.pass => {}
            Ok(v) => problems.push(format!("{label} {mode}: {}", failed(&v))),
            Err(err) => problems.push(format!("{label} {mode}: {err}")),
        }
        if c.steps.len() != steps {
            problems.push(format!("{label} {mode}: {} steps, expected {steps}", c.steps.len()));
        }
        let size = top_size(&c.final_object);
        if size != expected_size {
            problems.push(format!("{label} {mode}: final object has size {size}, expected {expected_size}"));
        }
        let top = e.tensor_many(&top_factors);
        if e.find_isomorphism(&c.final_object, &top).is_none() {
            problems.push(format!("{label} {mode}: final object is not X₂^⊗n"));
        }
    }
}

fn criterion_1() -> Outcome {
    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in default_filtration_indices() {
        for i in 0..25 {
            let (v0, v1): (Vec<FinSetMap>, Vec<FinSetMap>) = (0..n.len()).map(|_| injection_ladder(&mut rng, 3)).unzip();
            check_filtration(&FinSet, &v0, &v1, &n, |x| x.0 as i64, &format!("finset {n} #{i}"), &mut problems);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in default_filtration_indices() {
        for i in 0..5 {
            let dim = if n.total() >= 3 { 1 } else { 2 };
            let (v0, v1): (Vec<SimplicialMap>, Vec<SimplicialMap>) =
                (0..n.len()).map(|_| sset_ladder(&mut rng, 10, dim)).unzip();
            // χ is multiplicative, so it measures the expected tensor power
            check_filtration(&SSet, &v0, &v1, &n, |x| x.euler_characteristic(), &format!("sset {n} #{i}"), &mut problems);
        }
    }
    collect(problems)
}

fn criterion_2() -> Outcome {
    let report = chain_counterexample_report().map_err(|e| vec![e.to_string()])?;
    let verdicts = &report.instances[0].verdicts;
    let find = |claim_start: &str, label: &str| {
        verdicts
            .iter()
            .find(|v| v.claim.starts_with(claim_start))
            .and_then(|v| v.detail(label))
            .map(str::to_string)
            .unwrap_or_default()
    };
    let mut problems: Vec<String> = verdicts.iter().filter(|v| !v.pass).map(failed).collect();
    for (claim, label, expected) in [
        ("differentials", "d2", "[1; -1](2x1)"),
        ("differentials", "d1", "[1 1](1x2)"),
        ("coinvariant groups", "groups", "Z/2, Z, Z"),
        ("coinvariant homology", "homology", "0, 0, Z/2"),
    ] {
        let got = find(claim, label);
        if got != expected {
            problems.push(format!("{claim} {label}: {got}, expected {expected}"));
        }
    }
    collect(problems)
}

fn strings(h: &[pplab::chain::FPAbelianGroup]) -> Vec<String> {
    h.iter().map(|g| g.to_string()).collect()
}

fn criterion_3() -> Outcome {
    let mut problems = Vec::new();
    let h = bsigma_homology(2, 6, 5).map_err(|e| vec![e.to_string()])?;
    let expected = ["Z", "Z/2", "0", "Z/2", "0", "Z/2"];
    if strings(&h) != expected {
        problems.push(format!("BΣ2 homology {:?}, expected {expected:?}", strings(&h)));
    }
    let es = esigma_skeleton(2, 6).map_err(|e| vec![e.to_string()])?;
    let he = homology_through(&es.object, 5).map_err(|e| vec![e.to_string()])?;
    if strings(&he) != ["Z", "0", "0", "0", "0", "0"] {
        problems.push(format!("EΣ2 homology {:?}", strings(&he)));
    }
    collect(problems)
}

/// The edge of `Δ¹ × Δ¹` whose projections are both the nondegenerate edge,
/// found by scanning the edges through the projections.
fn diagonal_edge() -> usize {
    let d1 = generate_cell(CellKind::Simplex, 1, None).unwrap();
    let prod = sset_product(&d1, &d1);
    let edge = Simplex::nondegenerate(1, 0);
    let hits: Vec<usize> = (0..prod.object.count(1))
        .filter(|&i| {
            let s = Simplex::nondegenerate(1, i);
            prod.p1.apply(&s) == edge && prod.p2.apply(&s) == edge
        })
        .collect();
    assert_eq!(hits.len(), 1, "exactly one diagonal edge");
    hits[0]
}

fn criterion_4() -> Outcome {
    let mut problems = Vec::new();
    let f = cell_inclusion(CellKind::Boundary, 1, None).unwrap();
    let v = check_projective_cofibration(&f, 2).map_err(|e| vec![e.to_string()])?;
    let expected = format!("1:{}", diagonal_edge());
    if v.pass {
        problems.push("∂Δ¹ -> Δ¹ reported projective".into());
    }
    if v.detail("fixed cell") != Some(expected.as_str()) {
        problems.push(format!("fixed cell {:?}, expected {expected}", v.detail("fixed cell")));
    }
    let (_, eq) = pp_power(&SSet, &f, 2).map_err(|e| vec![e.to_string()])?;
    let coinv = coinvariant_arrow(&SSet, &eq).map_err(|e| vec![e.to_string()])?;
    if let Some((k, i, j)) = non_injective_pair(&coinv.arrow) {
        problems.push(format!("coinvariant arrow identifies {k}:{i} and {k}:{j}"));
    }
    collect(problems)
}

fn criterion_5() -> Outcome {
    let mut problems = Vec::new();
    let n = MultiIndex::single(2).unwrap();
    let ys = symmetroidal_ys(&n).map_err(|e| vec![e.to_string()])?;
    if ys.len() != 3 {
        problems.push(format!("{} arrows y, expected 3", ys.len()));
    }
    for (name, y) in &ys {
        for (m, k) in small_horns() {
            let horn = cell_inclusion(CellKind::Horn, m, Some(k)).unwrap();
            match check_symmetroidal_instance(y, &[horn], &n, true) {
                Ok(v) if v.pass => {}
                Ok(v) => problems.push(format!("{name} / Λ^{m}_{k}: {}", failed(&v))),
                Err(e) => problems.push(format!("{name} / Λ^{m}_{k}: {e}")),
            }
        }
    }
    collect(problems)
}

fn criterion_6() -> Outcome {
    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..100 {
        let result = random_finset_laws(&mut rng, 3).and_then(|inst| law_verdicts(&FinSet, &inst));
        let (a, b) = (pplab::checkers::random::finset_map(&mut rng, 3), pplab::checkers::random::finset_map(&mut rng, 3));
        match result {
            Ok(vs) => problems.extend(vs.iter().filter(|v| !v.pass).map(|v| format!("finset #{i}: {}", failed(v)))),
            Err(e) => problems.push(format!("finset #{i}: {e}")),
        }
        match pplab::pp::discrete_comparison(&a, &b).and_then(|sq| sq.is_isomorphism(&SSet)) {
            Ok(true) => {}
            Ok(false) => problems.push(format!("finset #{i}: discrete comparison is not an isomorphism")),
            Err(e) => problems.push(format!("finset #{i}: {e}")),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..100 {
        match random_sset_laws(&mut rng, 6).and_then(|inst| law_verdicts(&SSet, &inst)) {
            Ok(vs) => problems.extend(vs.iter().filter(|v| !v.pass).map(|v| format!("sset #{i}: {}", failed(v)))),
            Err(e) => problems.push(format!("sset #{i}: {e}")),
        }
    }
    collect(problems)
}

fn criterion_7() -> Outcome {
    let mut problems = Vec::new();
    let pt = generate_cell(CellKind::Simplex, 0, None).unwrap();
    let circle: SimplicialSet = generate_cell(CellKind::Boundary, 2, None).unwrap();
    let c = SimplicialMap::constant(&circle, &pt, 0).unwrap();
    let v = strict_vs_homotopy_pushout(&c, &c, 2).map_err(|e| vec![e.to_string()])?;
    if v.detail("strict") != Some("(Z, 0, 0)") || v.detail("homotopy") != Some("(Z, 0, Z)") {
        problems.push(format!("circle span: {}", failed(&v)));
    }
    let b = cell_inclusion(CellKind::Boundary, 1, None).unwrap();
    let collapse = SimplicialMap::constant(&b.dom, &pt, 0).unwrap();
    let v = strict_vs_homotopy_pushout(&b, &collapse, 2).map_err(|e| vec![e.to_string()])?;
    if !v.pass || v.detail("strict") != Some("(Z, Z, 0)") {
        problems.push(format!("cofibration span: {}", failed(&v)));
    }
    collect(problems)
}

fn criterion_8() -> Outcome {
    let report = run_named(&SuiteConfig::new("engine-invariants", SEED)).map_err(|e| vec![e.to_string()])?;
    let mut problems: Vec<String> = report.failures().map(|(i, v)| format!("{}: {}", i.key, failed(v))).collect();
    let cases = report.instances.len();
    if cases < 200 {
        problems.push(format!("only {cases} cases"));
    }
    let coset = report.instances.iter().filter(|i| i.key.starts_with("coset decomposition")).count();
    if coset == 0 {
        problems.push("no coset decomposition cases".into());
    }
    collect(problems)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 filtration certificates replay with exact step counts", criterion_1),
        ("2 chain counterexample groups", criterion_2),
        ("3 BΣ2 and EΣ2 homology", criterion_3),
        ("4 fixed diagonal edge, coinvariants mono", criterion_4),
        ("5 symmetroidality instances", criterion_5),
        ("6 pushout-product laws", criterion_6),
        ("7 strict against homotopy pushout", criterion_7),
        ("8 engine invariants", criterion_8),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err(vec!["panicked".into()]));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({secs:.1}s)"),
            Err(problems) => {
                all = false;
                println!("FAIL criterion {name} ({secs:.1}s)");
                for p in problems.iter().take(20) {
                    println!("    {p}");
                }
                if problems.len() > 20 {
                    println!("    ... {} more", problems.len() - 20);
                }
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! The ten acceptance criteria, one pass/fail line each, exact equality throughout.

mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use gpw_core::fixtures::{dual_numbers, t2, AlgebraFixture, Corpus, ExtensionFixture};
use gpw_core::frobenius::{
    adjunction_ext_check, adjunction_hom_check, casimir_centrality_check, exactness_preservation_check,
    induce_module, natural_splitting_solve, naturality_check, projective_preservation_check,
    separability_element_solve, triangle_identity_check, AdjunctionData, Direction, Flavor,
    SeparabilityOutcome, SplittingSide,
};
use gpw_core::gorenstein::{
    apply_functor_to_precover, gp_test, gp_test_with_segment, gp_transfer_check, gpd, gpd_invariance_check,
    precover_via_generators, transfer_precover, verify_precover, SeparabilityEvidence,
};
use gpw_core::homological::{ext_dim, GorensteinProfile};
use gpw_core::linalg::{rank, Matrix};
use gpw_core::module::{hom_space, Module, ModuleMap};
use gpw_core::session::{parse_session, run_tasks, ReportFormat, MASTER_SESSION};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn flavors(ext: &ExtensionFixture) -> [AdjunctionData; 2] {
    [
        AdjunctionData::new(ext.system.clone(), Flavor::IndRes),
        AdjunctionData::new(ext.system.clone(), Flavor::ResInd),
    ]
}

/// `(C fixture, D fixture)` for a flavor.
fn c_and_d<'a>(corpus: &'a Corpus, ext: &ExtensionFixture, flavor: Flavor) -> (&'a AlgebraFixture, &'a AlgebraFixture) {
    let (s, r) = corpus.sides(ext);
    match flavor {
        Flavor::IndRes => (s, r),
        Flavor::ResInd => (r, s),
    }
}

fn basis_maps(modules: &[(String, Arc<Module>)]) -> Vec<ModuleMap> {
    let mut out = Vec::new();
    for (_, a) in modules {
        for (_, b) in modules {
            out.extend(hom_space(a, b).expect("hom space"));
        }
    }
    out
}

fn criterion_1(corpus: &Corpus) -> Outcome {
    let mut corruptions = 0;
    for name in ["gf3-z2", "dual-skew", "dual-base-change"] {
        let fs = &corpus.extension(name).unwrap().system;
        fs.verify().map_err(|e| format!("{name}: {e}"))?;
        let e = fs.e();
        for i in 0..e.rows() {
            for j in 0..e.cols() {
                let mut bad = e.clone();
                bad.set(i, j, e.get(i, j) + &e.field().one());
                let detected = fs.with_e(bad).map_or(true, |c| c.verify().is_err());
                ensure(detected, || format!("{name}: corruption of E[{i}][{j}] went unnoticed"))?;
                corruptions += 1;
            }
        }
    }
    Ok(format!("3 systems verified, {corruptions} single-entry corruptions of E detected"))
}

fn criterion_2(corpus: &Corpus) -> Outcome {
    let (mut triangles, mut squares) = (0, 0);
    for ext in &corpus.extensions {
        for ad in flavors(ext) {
            let (c, d) = c_and_d(corpus, ext, ad.flavor);
            let mut family = c.module_list();
            family.extend(d.module_list());
            let t = triangle_identity_check(&ad, &family).map_err(|e| format!("{}: {e}", ext.name))?;
            ensure(t.holds, || format!("{} {:?}: triangle identity fails", ext.name, ad.flavor))?;
            triangles += t.records.len();
            let mut maps = basis_maps(&c.modules);
            if c.name != d.name {
                maps.extend(basis_maps(&d.modules));
            }
            let n = naturality_check(&ad, &maps).map_err(|e| format!("{}: {e}", ext.name))?;
            ensure(n.holds, || format!("{} {:?}: naturality square {:?} fails", ext.name, ad.flavor, n.first_failure))?;
            squares += n.squares;
        }
    }
    Ok(format!("{triangles} triangle identities, {squares} naturality squares"))
}

fn criterion_3(corpus: &Corpus) -> Outcome {
    let mut seen = std::collections::BTreeSet::new();
    let (mut exact, mut projective, mut pairs) = (0, 0, 0);
    for ext in &corpus.extensions {
        for (ses, direction) in corpus.sequences_for(ext) {
            let r = exactness_preservation_check(&ext.system, &ses.ses, direction).map_err(|e| e.to_string())?;
            ensure(r.exactness.exact, || format!("{}: {} not exact after {direction:?}", ext.name, ses.name))?;
            seen.insert(ses.name);
            exact += 1;
        }
        let (s, r) = corpus.sides(ext);
        for (side, direction) in [(s, Direction::Induce), (r, Direction::Restrict)] {
            for free in [Module::regular(side.algebra.clone()), Module::free(side.algebra.clone(), 2)] {
                let rep = projective_preservation_check(&ext.system, &Arc::new(free), direction)
                    .map_err(|e| e.to_string())?;
                ensure(rep.image_projective, || format!("{}: free module image not projective", ext.name))?;
                projective += 1;
            }
        }
        for ad in flavors(ext) {
            let (c, d) = c_and_d(corpus, ext, ad.flavor);
            for (xl, x) in &c.modules {
                for (nl, n) in &d.modules {
                    let hom = adjunction_hom_check(&ad, x, n).map_err(|e| e.to_string())?;
                    ensure(hom.is_ok(), || format!("{}: Hom mismatch for ({xl}, {nl}): {hom:?}", ext.name))?;
                    let r = adjunction_ext_check(&ad, x, n, 3).map_err(|e| e.to_string())?;
                    ensure(r.holds, || format!("{}: Ext mismatch for ({xl}, {nl}): {:?}", ext.name, r.first_mismatch))?;
                    pairs += 1;
                }
            }
        }
    }
    ensure(seen.len() == 10 && corpus.sequences.len() == 10, || format!("{} sequences exercised", seen.len()))?;
    Ok(format!(
        "{exact} exactness runs over 10 sequences, {projective} free images projective, {pairs} Hom/Ext pairs to i = 3"
    ))
}

fn criterion_4(corpus: &Corpus) -> Outcome {
    let gf3 = &corpus.extension("gf3-z2").unwrap().system;
    let e = match separability_element_solve(gf3).map_err(|e| e.to_string())? {
        SeparabilityOutcome::Found(e) => e,
        other => return Err(format!("GF(3)[Z2]: {other:?}")),
    };
    ensure(e.formatted == "2(e⊗e) + 2(g⊗g)", || format!("element {}", e.formatted))?;
    ensure(e.solution_space_dim == 0, || "element not unique".into())?;
    let gf2 = &corpus.extension("gf2-z2").unwrap().system;
    let out = separability_element_solve(gf2).map_err(|e| e.to_string())?;
    ensure(matches!(out, SeparabilityOutcome::Infeasible { .. }), || "GF(2)[Z2] not infeasible".into())?;
    let mut casimir = 0;
    for ext in corpus.extensions.iter().filter(|e| e.skew_group) {
        let c = casimir_centrality_check(&ext.system).map_err(|e| e.to_string())?;
        ensure(c.s_central, || format!("{}: Casimir element not S-central", ext.name))?;
        casimir += 1;
    }
    let mut agree = 0;
    for ext in &corpus.extensions {
        let element = separability_element_solve(&ext.system).map_err(|e| e.to_string())?.element().is_some();
        let ad = AdjunctionData::new(ext.system.clone(), Flavor::IndRes);
        let (_, r) = corpus.sides(ext);
        let split = natural_splitting_solve(&ad, &r.module_list(), SplittingSide::Counit)
            .map_err(|e| e.to_string())?
            .witness()
            .is_some();
        ensure(element == split, || format!("{}: element {element}, splitting {split}", ext.name))?;
        agree += 1;
    }
    Ok(format!(
        "e = {}, GF(2) infeasible, {casimir} Casimir checks, {agree} extensions agree on splitting",
        e.formatted
    ))
}

/// `dim coker(Hom(P₂, A) → Hom(P₁, A))` from the hand-built resolution `0 → P₁ → P₂ → S₂ → 0`.
fn brute_force_ext1_s2() -> usize {
    let (a, p1, p2, _) = t2();
    let reg = Arc::new(Module::regular(a.clone()));
    let inc = Matrix::from_i64(a.field(), &[vec![0], vec![1]]);
    let from_p2 = hom_space(&p2, &reg).unwrap();
    let from_p1 = hom_space(&p1, &reg).unwrap();
    let restricted: Vec<Vec<_>> = from_p2
        .iter()
        .map(|f| f.matrix().mul(&inc).unwrap().col(0))
        .collect();
    let image = if restricted.is_empty() {
        0
    } else {
        rank(&Matrix::from_columns(a.field(), reg.dim(), &restricted))
    };
    from_p1.len() - image
}

fn criterion_5(corpus: &Corpus) -> Outcome {
    let t2f = corpus.algebra("t2").unwrap();
    let profile = t2f.profile();
    for label in ["0", "P1", "P2", "P1+P2"] {
        let c = gp_test(t2f.module(label).unwrap(), &profile).map_err(|e| e.to_string())?;
        ensure(c.valid(), || format!("{label} refuted"))?;
    }
    let s2 = t2f.module("S2").unwrap();
    let c = gp_test(s2, &profile).map_err(|e| e.to_string())?;
    ensure(!c.valid() && c.ext_record == vec![1], || format!("S2 record {:?}", c.ext_record))?;
    let brute = brute_force_ext1_s2();
    ensure(brute == 1, || format!("brute-force Ext^1(S2, A) = {brute}"))?;
    let g = gpd(s2, &profile).map_err(|e| e.to_string())?;
    ensure(g.value == 1, || format!("gpd(S2) = {}", g.value))?;
    let mut universal = 0;
    for fixture in corpus.algebras.iter().filter(|a| a.d == 0) {
        for (label, m) in &fixture.modules {
            let c = gp_test(m, &fixture.profile()).map_err(|e| e.to_string())?;
            ensure(c.valid(), || format!("{}: {label} refuted under d = 0", fixture.name))?;
            universal += 1;
        }
    }
    let (dual, k) = dual_numbers();
    let cert = gp_test_with_segment(&k, &GorensteinProfile::asserted(dual, 0), 2).map_err(|e| e.to_string())?;
    let seg = cert.segment.as_ref().ok_or("no segment")?;
    ensure(seg.exactness.exact && seg.dual_exactness.exact, || "segment not totally acyclic".into())?;
    ensure(seg.modules.len() == 6, || format!("segment has {} terms", seg.modules.len()))?;
    Ok(format!(
        "T2 verdicts as expected, Ext^1(S2, A) = 1 twice, gpd(S2) = 1, {universal} d = 0 modules valid, width-2 segment for k totally acyclic"
    ))
}

fn criterion_6(corpus: &Corpus) -> Outcome {
    let mut runs = 0;
    for ext in &corpus.extensions {
        for ad in flavors(ext) {
            let (c, d) = c_and_d(corpus, ext, ad.flavor);
            for (label, x) in &c.modules {
                let r = gp_transfer_check(&ad, x, &c.profile(), &d.profile(), true, &c.module_list())
                    .map_err(|e| format!("{} {:?} {label}: {e}", ext.name, ad.flavor))?;
                ensure(!r.counterexample(), || format!("{} {:?} {label}: counterexample", ext.name, ad.flavor))?;
                ensure(r.faithfulness.is_some(), || "faithfulness not recorded".into())?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} forward and converse runs, no counterexample"))
}

fn criterion_7(corpus: &Corpus) -> Outcome {
    let mut runs = 0;
    for ext in &corpus.extensions {
        for ad in flavors(ext) {
            let (c, d) = c_and_d(corpus, ext, ad.flavor);
            for (label, x) in &c.modules {
                let r = gpd_invariance_check(&ad, x, &c.profile(), &d.profile(), &c.module_list())
                    .map_err(|e| format!("{} {:?} {label}: {e}", ext.name, ad.flavor))?;
                ensure(r.equal, || {
                    format!("{} {label}: {} vs {}", ext.name, r.gpd_x.value, r.gpd_fx.value)
                })?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} invariance runs, all equal"))
}

fn induced_family(corpus: &Corpus, ext: &ExtensionFixture) -> Vec<(String, Arc<Module>)> {
    let (s, r) = corpus.sides(ext);
    let mut family = r.modules.clone();
    for (label, m) in &s.modules {
        family.push((format!("Ind {label}"), induce_module(&ext.system, m).unwrap().module));
    }
    family
}

fn criterion_8(corpus: &Corpus) -> Outcome {
    let mut transfers = 0;
    for (name, targets) in [
        ("gf3-z2", &["sign", "R"][..]),
        ("dual-skew", &["R", "chi+", "chi-"][..]),
    ] {
        let ext = corpus.extension(name).unwrap();
        let (s, r) = corpus.sides(ext);
        let ad = AdjunctionData::new(ext.system.clone(), Flavor::IndRes);
        let outcome = separability_element_solve(&ext.system).map_err(|e| e.to_string())?;
        let element = outcome.element().ok_or(format!("{name}: no separability element"))?;
        let family = induced_family(corpus, ext);
        let s_profile = s.profile();
        let builder = |m: &Arc<Module>| precover_via_generators(&s.generators, m, &s_profile);
        for target in targets {
            let n = r.module(target).unwrap();
            let t = transfer_precover(
                &ad,
                n,
                &builder,
                Some(SeparabilityEvidence::Element(element)),
                &family,
                &r.profile(),
            )
            .map_err(|e| format!("{name} n = {target}: {e}"))?;
            let again = verify_precover(&t.gamma.phi, &family, &r.profile()).map_err(|e| e.to_string())?;
            ensure(again.valid(), || format!("{name} n = {target}: gamma refuted"))?;
            transfers += 1;
        }
    }
    let mut applied = 0;
    for ext in &corpus.extensions {
        let (s, r) = corpus.sides(ext);
        for (from, to, direction) in [(s, r, Direction::Induce), (r, s, Direction::Restrict)] {
            for (label, m) in &from.modules {
                let cert = precover_via_generators(&from.generators, m, &from.profile()).map_err(|e| e.to_string())?;
                ensure(cert.valid(), || format!("{}: base precover of {label} invalid", ext.name))?;
                let image = apply_functor_to_precover(&ext.system, &cert, direction, &to.profile())
                    .map_err(|e| format!("{} {label} {direction:?}: {e}", ext.name))?;
                ensure(image.valid(), || format!("{} {label}: image refuted", ext.name))?;
                applied += 1;
            }
        }
    }
    Ok(format!("{transfers} transferred precovers verified, {applied} functor images verified"))
}

fn criterion_9(corpus: &Corpus) -> Outcome {
    let mut checked = 0;
    for fixture in &corpus.algebras {
        for a in &fixture.ext_assertions {
            let (m, n) = (fixture.module(a.m).unwrap(), fixture.module(a.n).unwrap());
            let oracle = common::oracle_ext_dim(m, n, a.degree);
            let production = ext_dim(m, n, a.degree).map_err(|e| e.to_string())?;
            ensure(oracle == a.dim && production == a.dim, || {
                format!(
                    "{}: Ext^{}({}, {}) asserted {}, oracle {oracle}, production {production}",
                    fixture.name, a.degree, a.m, a.n, a.dim
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} asserted Ext dimensions reproduced by the padded-resolution oracle"))
}

fn criterion_10() -> Outcome {
    let run = || -> Result<(String, String), String> {
        let session = parse_session(MASTER_SESSION).map_err(|e| e.to_string())?;
        let report = run_tasks(&session);
        Ok((report.emit(ReportFormat::Text), report.emit(ReportFormat::Structured)))
    };
    let first = run()?;
    let second = run()?;
    ensure(first == second, || "master session reports differ between runs".into())?;
    Ok(format!(
        "master session reproduced byte for byte ({} text bytes, {} structured bytes)",
        first.0.len(),
        first.1.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = Corpus::build();
    let criteria: [(&str, &dyn Fn() -> Outcome); 10] = [
        ("Frobenius systems", &|| criterion_1(&corpus)),
        ("adjunction identities", &|| criterion_2(&corpus)),
        ("exactness, projectives, Hom/Ext isomorphisms", &|| criterion_3(&corpus)),
        ("separability", &|| criterion_4(&corpus)),
        ("Gorenstein projectives", &|| criterion_5(&corpus)),
        ("GP transfer", &|| criterion_6(&corpus)),
        ("Gpd invariance", &|| criterion_7(&corpus)),
        ("precover transfer", &|| criterion_8(&corpus)),
        ("oracle equivalence", &|| criterion_9(&corpus)),
        ("determinism", &criterion_10),
    ];
    let mut failures = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{:.2?}]", idx + 1, t.elapsed()),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{:.2?}]", idx + 1, t.elapsed());
            }
        }
    }
    println!("acceptance: {} of 10 passed in {:.2?}", 10 - failures, start.elapsed());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! One task, one operation: runs a task against the registry and records its answer.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::frobenius::{
    adjunction_ext_check, adjunction_hom_check, casimir_centrality_check, exactness_preservation_check,
    faithfulness_check, natural_splitting_solve, naturality_check, projective_preservation_check,
    separability_element_solve, triangle_identity_check, AdjunctionData, FrobeniusError, SeparabilityOutcome,
    SplittingOutcome, SplittingSide, SplittingWitness,
};
use crate::gorenstein::{
    apply_functor_to_precover, gp_test, gp_test_with_segment, gp_transfer_check, gpd, gpd_invariance_check,
    precover_via_generators, transfer_precover, verify_precover, GorensteinError, SeparabilityEvidence,
};
use crate::homological::{complete_resolution, HomologicalError};
use crate::module::{Module, ShortExactSequence};

use super::registry::{Entity, Registry};
use super::report::{Outcome, TaskRecord};
use super::schema::{SeparabilitySource, TaskDef};

/// A task's answer before it is stamped with its position.
struct Answer {
    outcome: Outcome,
    summary: String,
    detail: Value,
}

fn answer(holds: bool, summary: impl Into<String>, detail: Value) -> Answer {
    Answer {
        outcome: if holds { Outcome::Ok } else { Outcome::Refuted },
        summary: summary.into(),
        detail,
    }
}

fn failure(summary: impl Into<String>, detail: Value) -> Answer {
    Answer {
        outcome: Outcome::Error,
        summary: summary.into(),
        detail,
    }
}

fn err_answer(e: impl std::fmt::Display) -> Answer {
    let msg = e.to_string();
    failure(msg.clone(), json!({ "error": msg }))
}

fn gorenstein_err(e: GorensteinError) -> Answer {
    let msg = e.to_string();
    let mut detail = json!({ "error": msg });
    match &e {
        GorensteinError::TransferredVerificationFailed(cert) => detail["bundle"] = cert.to_json(),
        GorensteinError::FaithfulnessNotEstablished(report) => detail["faithfulness"] = json!(report),
        _ => {}
    }
    failure(msg, detail)
}

fn look<T>(r: Result<T, super::SessionError>) -> Result<T, Answer> {
    r.map_err(err_answer)
}

fn fro<T>(r: Result<T, FrobeniusError>) -> Result<T, Answer> {
    r.map_err(err_answer)
}

fn gor<T>(r: Result<T, GorensteinError>) -> Result<T, Answer> {
    r.map_err(gorenstein_err)
}

fn verdict(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn witness_json(w: &SplittingWitness) -> Value {
    json!({
        "side": w.side,
        "components": w.components.iter().map(|c| c.matrix().to_json()).collect::<Vec<_>>(),
        "naturality_squares": w.naturality_squares,
    })
}

pub fn run_task(index: usize, task: &TaskDef, reg: &Registry) -> TaskRecord {
    let a = match execute(task, reg) {
        Ok(a) => a,
        Err(a) => a,
    };
    TaskRecord {
        index,
        task: task.name().to_string(),
        id: task.id().map(str::to_string),
        outcome: a.outcome,
        summary: a.summary,
        detail: a.detail,
    }
}

/// Definition lookups were resolved at parse time, so lookup failures here are defects
/// surfaced as task errors rather than panics.
fn execute(task: &TaskDef, reg: &Registry) -> Result<Answer, Answer> {
    let ctx = task.name();
    let adjunction = |system: &str, flavor| -> Result<AdjunctionData, Answer> {
        Ok(AdjunctionData::new(look(reg.system(system, ctx))?, flavor))
    };

    Ok(match task {
        TaskDef::Validate { target, .. } => {
            let entity = reg.get(target).ok_or_else(|| err_answer(format!("unknown name {target}")))?;
            let (ok, detail) = match entity {
                Entity::Algebra(a) => (a.validate().is_ok(), json!({ "dim": a.dim(), "labels": a.labels(), "products": a.products_json() })),
                Entity::Embedding(e) => (e.validate().is_ok(), json!({ "matrix": e.map().to_json() })),
                Entity::System(s) => {
                    let v = s.verify();
                    (v.is_ok(), json!({ "system": s.to_json(), "failure": v.err().map(|e| e.to_string()) }))
                }
                Entity::Module(m) => (m.validate().is_ok(), m.to_json()),
                Entity::Map(m) => (m.validate().is_ok(), m.to_json()),
                Entity::Profile(p) => (true, p.to_json()),
                Entity::Generators(g) => (
                    true,
                    json!({
                        "modules": g.modules.iter().map(|(l, _)| l).collect::<Vec<_>>(),
                        "provenance": g.provenance,
                    }),
                ),
            };
            answer(ok, format!("{} {target}: {}", entity.kind(), if ok { "valid" } else { "invalid" }), detail)
        }
        TaskDef::FrobeniusCheck { system, .. } => {
            let fs = look(reg.system(system, ctx))?;
            match fs.verify() {
                Ok(()) => answer(true, "bimodule map and both dual-basis expansions hold", fs.to_json()),
                Err(e) => answer(false, e.to_string(), json!({ "system": fs.to_json(), "failure": e.to_string() })),
            }
        }
        TaskDef::TriangleCheck { system, flavor, family, maps, .. } => {
            let ad = adjunction(system, *flavor)?;
            let family = look(reg.modules(family, ctx))?;
            let t = fro(triangle_identity_check(&ad, &family))?;
            let maps = maps.iter().map(|m| reg.map(m, ctx)).collect::<Result<Vec<_>, _>>();
            let n = fro(naturality_check(&ad, &look(maps)?))?;
            answer(
                t.holds && n.holds,
                format!(
                    "triangle identities ({}): {}, naturality squares ({}): {}",
                    t.records.len(),
                    verdict(t.holds),
                    n.squares,
                    verdict(n.holds)
                ),
                json!({ "triangles": t, "naturality": n }),
            )
        }
        TaskDef::AdjunctionCheck { system, flavor, x, n, i_max, .. } => {
            let ad = adjunction(system, *flavor)?;
            let (x, n) = (look(reg.module(x, ctx))?, look(reg.module(n, ctx))?);
            let h = fro(adjunction_hom_check(&ad, &x, &n))?;
            let e = fro(adjunction_ext_check(&ad, &x, &n, *i_max))?;
            let hom = match h {
                Ok(d) => json!({ "holds": true, "dim": d }),
                Err((l, r)) => json!({ "holds": false, "left": l, "right": r }),
            };
            let holds = h.is_ok() && e.holds;
            answer(
                holds,
                format!("Hom and Ext^0..{i_max} dimensions agree across the adjunction: {}", verdict(holds)),
                json!({ "hom": hom, "ext": e }),
            )
        }
        TaskDef::ExactnessCheck { system, direction, i, p, .. } => {
            let fs = look(reg.system(system, ctx))?;
            let ses = ShortExactSequence::new(look(reg.map(i, ctx))?, look(reg.map(p, ctx))?).map_err(err_answer)?;
            let r = fro(exactness_preservation_check(&fs, &ses, *direction))?;
            answer(r.exactness.exact, format!("image sequence exact: {}", r.exactness.exact), json!(r))
        }
        TaskDef::ProjectivePreservation { system, direction, module, .. } => {
            let fs = look(reg.system(system, ctx))?;
            let r = fro(projective_preservation_check(&fs, &look(reg.module(module, ctx))?, *direction))?;
            answer(r.image_projective, format!("image of dimension {} projective: {}", r.image_dim, r.image_projective), json!(r))
        }
        TaskDef::Faithfulness { system, flavor, family, .. } => {
            let ad = adjunction(system, *flavor)?;
            let r = fro(faithfulness_check(&ad, &look(reg.modules(family, ctx))?))?;
            let holds = r.f_faithful_on_family && r.g_faithful_on_family;
            answer(
                holds,
                format!(
                    "units injective: {}, counits surjective: {}",
                    r.f_faithful_on_family, r.g_faithful_on_family
                ),
                json!(r),
            )
        }
        TaskDef::Separability { system, .. } => {
            let fs = look(reg.system(system, ctx))?;
            let out = fro(separability_element_solve(&fs))?;
            let casimir = fro(casimir_centrality_check(&fs))?;
            let detail = json!({ "solve": out, "casimir": casimir });
            match &out {
                SeparabilityOutcome::Found(e) => answer(
                    true,
                    format!("e = {} (solution space dimension {})", e.formatted, e.solution_space_dim),
                    detail,
                ),
                SeparabilityOutcome::Infeasible { equations, .. } => Answer {
                    outcome: Outcome::Infeasible,
                    summary: format!("no separability element; {equations} equations, certificate attached"),
                    detail,
                },
            }
        }
        TaskDef::NaturalSplitting { system, flavor, side, family, .. } => {
            let ad = adjunction(system, *flavor)?;
            match fro(natural_splitting_solve(&ad, &look(reg.modules(family, ctx))?, *side))? {
                SplittingOutcome::Found(w) => answer(
                    true,
                    format!("natural splitting found, {} naturality squares", w.naturality_squares),
                    witness_json(&w),
                ),
                SplittingOutcome::Infeasible { unknowns, equations } => Answer {
                    outcome: Outcome::Infeasible,
                    summary: format!("no natural splitting on this family ({unknowns} unknowns, {equations} equations)"),
                    detail: json!({ "unknowns": unknowns, "equations": equations }),
                },
            }
        }
        TaskDef::GpTest { module, profile, width, .. } => {
            let m = look(reg.module(module, ctx))?;
            let p = look(reg.profile(profile, ctx))?;
            let cert = match width {
                Some(w) => gor(gp_test_with_segment(&m, &p, *w))?,
                None => gor(gp_test(&m, &p))?,
            };
            answer(
                cert.valid(),
                if cert.d == 0 {
                    "profile d = 0, no Ext condition to check".to_string()
                } else {
                    format!("Ext^1..{}(M, A) = {:?}", cert.d, cert.ext_record)
                },
                cert.to_json(),
            )
        }
        TaskDef::Gpd { module, profile, .. } => {
            let m = look(reg.module(module, ctx))?;
            let p = look(reg.profile(profile, ctx))?;
            match gpd(&m, &p) {
                Ok(r) => answer(true, format!("Gpd = {}", r.value), r.to_json()),
                Err(GorensteinError::ProfileExhausted(d)) => answer(
                    false,
                    format!("no syzygy up to degree {d} is Gorenstein projective; the profile is wrong"),
                    json!({ "profile_exhausted": d }),
                ),
                Err(e) => return Err(gorenstein_err(e)),
            }
        }
        TaskDef::GpTransfer { system, flavor, x, c_profile, d_profile, converse, family, .. } => {
            let ad = adjunction(system, *flavor)?;
            let r = gor(gp_transfer_check(
                &ad,
                &look(reg.module(x, ctx))?,
                &look(reg.profile(c_profile, ctx))?,
                &look(reg.profile(d_profile, ctx))?,
                *converse,
                &look(reg.modules(family, ctx))?,
            ))?;
            answer(
                !r.counterexample(),
                format!(
                    "X GP: {}, F(X) GP: {}, forward {}{}",
                    r.x.valid(),
                    r.fx.valid(),
                    verdict(r.forward_holds),
                    r.converse_holds.map(|c| format!(", converse {}", verdict(c))).unwrap_or_default()
                ),
                r.to_json(),
            )
        }
        TaskDef::GpdInvariance { system, flavor, x, c_profile, d_profile, family, .. } => {
            let ad = adjunction(system, *flavor)?;
            let r = gor(gpd_invariance_check(
                &ad,
                &look(reg.module(x, ctx))?,
                &look(reg.profile(c_profile, ctx))?,
                &look(reg.profile(d_profile, ctx))?,
                &look(reg.modules(family, ctx))?,
            ))?;
            answer(r.equal, format!("Gpd(X) = {}, Gpd(F(X)) = {}", r.gpd_x.value, r.gpd_fx.value), r.to_json())
        }
        TaskDef::Precover { generators, module, profile, .. } => {
            let gl = look(reg.generators(generators, ctx))?;
            let cert = gor(precover_via_generators(&gl, &look(reg.module(module, ctx))?, &look(reg.profile(profile, ctx))?))?;
            answer(cert.valid(), format!("precover from dim {} verified: {}", cert.phi.source().dim(), cert.valid()), cert.to_json())
        }
        TaskDef::VerifyPrecover { map, family, profile, .. } => {
            let cert = gor(verify_precover(
                &look(reg.map(map, ctx))?,
                &look(reg.named_modules(family, ctx))?,
                &look(reg.profile(profile, ctx))?,
            ))?;
            let summary = match cert.refutation() {
                Some((member, _)) => format!("refuted: a map from {member} does not factor"),
                None if !cert.x_certificate.valid() => "every map factors, but the source is not GP".to_string(),
                None => "every basis map from the family factors".to_string(),
            };
            answer(cert.valid(), summary, cert.to_json())
        }
        TaskDef::ApplyFunctorPrecover { system, direction, map, family, source_profile, target_profile, .. } => {
            let fs = look(reg.system(system, ctx))?;
            let cert = gor(verify_precover(
                &look(reg.map(map, ctx))?,
                &look(reg.named_modules(family, ctx))?,
                &look(reg.profile(source_profile, ctx))?,
            ))?;
            if !cert.valid() {
                return Err(failure(
                    "input precover does not verify",
                    json!({ "error": "precondition failed", "input": cert.to_json() }),
                ));
            }
            let image = gor(apply_functor_to_precover(&fs, &cert, *direction, &look(reg.profile(target_profile, ctx))?))?;
            answer(true, format!("image precover from dim {} verified", image.phi.source().dim()), image.to_json())
        }
        TaskDef::TransferPrecover { system, flavor, n, generators, c_profile, d_profile, separability, family, .. } => {
            let ad = adjunction(system, *flavor)?;
            let gl = look(reg.generators(generators, ctx))?;
            let c_profile = look(reg.profile(c_profile, ctx))?;
            let family = look(reg.named_modules(family, ctx))?;
            let solved;
            let split;
            let evidence = match separability {
                SeparabilitySource::Element => {
                    solved = fro(separability_element_solve(&ad.system))?;
                    solved.element().map(SeparabilityEvidence::Element)
                }
                SeparabilitySource::Splitting => {
                    let members: Vec<Arc<Module>> = family.iter().map(|(_, m)| m.clone()).collect();
                    split = fro(natural_splitting_solve(&ad, &members, SplittingSide::Counit))?;
                    split.witness().map(SeparabilityEvidence::Splitting)
                }
                SeparabilitySource::None => None,
            };
            let builder = |m: &Arc<Module>| precover_via_generators(&gl, m, &c_profile);
            let t = gor(transfer_precover(
                &ad,
                &look(reg.module(n, ctx))?,
                &builder,
                evidence,
                &family,
                &look(reg.profile(d_profile, ctx))?,
            ))?;
            answer(
                t.gamma.valid(),
                format!("gamma from dim {} verified against {} family members", t.gamma.phi.source().dim(), family.len()),
                t.to_json(),
            )
        }
        TaskDef::CompleteResolution { module, profile, width, .. } => {
            let m = look(reg.module(module, ctx))?;
            match complete_resolution(&m, *width, &look(reg.profile(profile, ctx))?) {
                Ok(seg) => answer(
                    seg.exactness.exact && seg.dual_exactness.exact,
                    format!("width {width} segment, free ranks {:?}", seg.free_ranks),
                    seg.to_json(),
                ),
                Err(HomologicalError::NotGorensteinProjective(why)) => {
                    answer(false, format!("not Gorenstein projective: {why}"), json!({ "reason": why }))
                }
                Err(e) => return Err(err_answer(e)),
            }
        }
    })
}

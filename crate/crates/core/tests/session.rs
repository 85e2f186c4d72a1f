use std::collections::BTreeMap;

use gpw_core::session::{parse_session, run_tasks, Outcome, Report, ReportFormat, SessionError, MASTER_SESSION};
use serde_json::Value;

fn run(text: &str) -> Report {
    run_tasks(&parse_session(text).expect("session parses"))
}

const GF2_GROUP: &str = r#"{
    "field": 2,
    "algebras": [{ "name": "k[z2]", "kind": "group_algebra", "group": { "cyclic": 2 } }],
    "frobenius_systems": [{ "name": "sys", "kind": "canonical", "target": "k[z2]" }],
    "tasks": [{ "task": "separability", "system": "sys" }]
}"#;

const GF3_GROUP: &str = r#"{
    "field": 3,
    "algebras": [
        { "name": "k", "kind": "ground" },
        { "name": "k[z2]", "kind": "group_algebra", "group": { "cyclic": 2 } }
    ],
    "frobenius_systems": [{ "name": "sys", "kind": "canonical", "target": "k[z2]" }],
    "modules": [
        { "name": "k1", "kind": "regular", "algebra": "k" },
        { "name": "R", "kind": "regular", "algebra": "k[z2]" },
        { "name": "sign", "kind": "character", "algebra": "k[z2]", "values": [1, 2] }
    ],
    "tasks": [
        { "task": "triangle-check", "system": "sys", "flavor": "ind_res", "family": ["k1", "R", "sign"] },
        { "task": "triangle-check", "system": "sys", "flavor": "res_ind", "family": ["k1", "R", "sign"] }
    ]
}"#;

#[test]
fn triangle_check_on_gf3_group_algebra_is_ok() {
    let r = run(GF3_GROUP);
    assert_eq!(r.tasks.len(), 2);
    assert!(r.tasks.iter().all(|t| t.outcome == Outcome::Ok), "{}", r.emit(ReportFormat::Text));
}

#[test]
fn gf2_group_algebra_separability_is_infeasible_not_error() {
    let r = run(GF2_GROUP);
    assert_eq!(r.tasks[0].outcome, Outcome::Infeasible);
    assert_eq!(r.summary.error, 0);
    assert_eq!(r.tasks[0].detail["solve"]["outcome"], "infeasible");
}

#[test]
fn refuted_precover_report_carries_the_unsolvable_map() {
    let r = run(MASTER_SESSION);
    let t = r
        .tasks
        .iter()
        .find(|t| t.id.as_deref() == Some("refuted-precover"))
        .expect("master session has the refuted precover");
    assert_eq!(t.outcome, Outcome::Refuted);
    assert_eq!(t.detail["refutation"]["member"], "Dk");
    // the identity of k admits no lift through A → k
    assert_eq!(t.detail["refutation"]["unsolvable_map"], serde_json::json!([[1]]));
    let text = r.emit(ReportFormat::Text);
    assert!(text.contains("\"unsolvable_map\":[[1]]"));
}

#[test]
fn master_session_has_no_errors_and_every_task_name() {
    let r = run(MASTER_SESSION);
    assert_eq!(r.summary.error, 0, "{}", r.emit(ReportFormat::Text));
    let names: std::collections::BTreeSet<&str> = r.tasks.iter().map(|t| t.task.as_str()).collect();
    assert_eq!(names.len(), 18);
    assert!(r.tasks.iter().any(|t| t.outcome == Outcome::Infeasible));
}

#[test]
fn emission_is_deterministic() {
    let a = run(MASTER_SESSION);
    let b = run(MASTER_SESSION);
    for f in [ReportFormat::Text, ReportFormat::Structured] {
        assert_eq!(a.emit(f), b.emit(f));
    }
}

#[test]
fn structured_report_round_trips() {
    let r = run(MASTER_SESSION);
    let s = r.emit(ReportFormat::Structured);
    let back = Report::from_structured(&s).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.emit(ReportFormat::Structured), s);
}

#[test]
fn structured_keys_are_sorted() {
    let s = run(MASTER_SESSION).emit(ReportFormat::Structured);
    // Value objects are sorted maps, so re-rendering reproduces the text only if it was sorted
    let v: Value = serde_json::from_str(&s).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", s);
}

#[test]
fn text_and_structured_outcomes_agree() {
    let r = run(MASTER_SESSION);
    let structured: Value = serde_json::from_str(&r.emit(ReportFormat::Structured)).unwrap();
    let from_structured: BTreeMap<u64, String> = structured["tasks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["index"].as_u64().unwrap(), t["outcome"].as_str().unwrap().to_string()))
        .collect();
    let text = r.emit(ReportFormat::Text);
    let from_text: BTreeMap<u64, String> = text
        .lines()
        .filter_map(|l| {
            let mut it = l.split_whitespace();
            let index = it.next()?.parse().ok()?;
            Some((index, it.next()?.to_string()))
        })
        .collect();
    assert_eq!(from_text, from_structured);
}

#[test]
fn failures_do_not_abort_later_tasks() {
    // Dk is not projective, so the first task errors; the second still runs
    let text = r#"{
        "field": 3,
        "algebras": [
            { "name": "D", "kind": "polynomial_quotient", "var": "x", "coeffs": [0, 0] },
            { "name": "D*z2", "kind": "skew_group_ring", "base": "D", "group": { "cyclic": 2 },
              "action": [[[1, 0], [0, 1]], [[1, 0], [0, 2]]] }
        ],
        "frobenius_systems": [{ "name": "sys", "kind": "canonical", "target": "D*z2" }],
        "modules": [{ "name": "Dk", "kind": "character", "algebra": "D", "values": [1, 0] }],
        "tasks": [
            { "task": "projective-preservation", "system": "sys", "direction": "induce", "module": "Dk" },
            { "task": "frobenius-check", "system": "sys" }
        ]
    }"#;
    let r = run(text);
    assert_eq!(r.tasks[0].outcome, Outcome::Error);
    assert!(r.tasks[0].detail["error"].is_string());
    assert_eq!(r.tasks[1].outcome, Outcome::Ok);
    assert!(r.has_errors());
}

#[test]
fn kind_mismatch_is_a_validation_failure() {
    let text = r#"{
        "field": 3,
        "algebras": [{ "name": "k", "kind": "ground" }],
        "modules": [{ "name": "M", "kind": "regular", "algebra": "k" }],
        "maps": [{ "name": "f", "kind": "identity", "module": "k" }]
    }"#;
    assert!(matches!(parse_session(text), Err(SessionError::ValidationFailed { .. })));
}

#[test]
fn duplicate_names_rejected() {
    let text = r#"{
        "field": 3,
        "algebras": [{ "name": "k", "kind": "ground" }],
        "modules": [{ "name": "k", "kind": "regular", "algebra": "k" }]
    }"#;
    assert!(matches!(parse_session(text), Err(SessionError::ValidationFailed { .. })));
}

#[test]
fn spot_check_failure_rejects_the_profile() {
    // upper-triangular 2×2 matrices have self-injective dimension 1, so d = 0 must fail
    let text = r#"{
        "field": 3,
        "algebras": [{ "name": "T2", "kind": "upper_triangular", "n": 2 }],
        "profiles": [{ "name": "p", "algebra": "T2", "d": 0, "mode": "spot_checked" }]
    }"#;
    match parse_session(text) {
        Err(SessionError::ValidationFailed { entity, .. }) => assert_eq!(entity, "p"),
        other => panic!("expected validation failure, got {other:?}"),
    }
}

#[test]
fn syntax_error_has_location() {
    match parse_session("{\n  \"field\": 3,\n  \"algebras\": [\n") {
        Err(SessionError::Syntax { line, .. }) => assert!(line >= 3),
        other => panic!("expected syntax error, got {other:?}"),
    }
}

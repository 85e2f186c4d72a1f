//! Session files: a field, named definitions and an ordered task list, run into a report.

mod registry;
mod report;
mod schema;
mod tasks;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use sha2::{Digest, Sha256};
use thiserror::Error;

pub use registry::{Entity, Registry};
pub use report::{Outcome, OutcomeCounts, Report, ReportFormat, ReportHeader, TaskRecord};
pub use schema::{SessionDoc, TaskDef};

/// Exercises every task name over the shipped fixtures.
pub const MASTER_SESSION: &str = include_str!("master.json");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SessionError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown reference {name:?} in {context}")]
    UnknownReference { name: String, context: String },
    #[error("validation failed for {entity}: {reason}")]
    ValidationFailed { entity: String, reason: String },
}

#[derive(Debug)]
pub struct Session {
    pub tasks: Vec<TaskDef>,
    pub registry: Registry,
    /// Hex SHA-256 of the input text.
    pub digest: String,
}

/// Parses, resolves and validates every definition, then checks that each task's names exist.
pub fn parse_session(text: &str) -> Result<Session, SessionError> {
    let doc: SessionDoc = serde_json::from_str(text).map_err(|e| SessionError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let registry = Registry::build(&doc)?;
    for (k, task) in doc.tasks.iter().enumerate() {
        for name in task.references() {
            if !registry.contains(name) {
                return Err(SessionError::UnknownReference {
                    name: name.to_string(),
                    context: format!("task {} ({})", k + 1, task.name()),
                });
            }
        }
    }
    Ok(Session {
        tasks: doc.tasks,
        registry,
        digest: format!("{:x}", Sha256::digest(text.as_bytes())),
    })
}

/// Runs every task; tasks are independent, so they are spread over worker threads and the
/// records are put back in session order.
pub fn run_tasks(session: &Session) -> Report {
    let n = session.tasks.len();
    let slots: Vec<Mutex<Option<TaskRecord>>> = (0..n).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get()).min(n.max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                if k >= n {
                    break;
                }
                let record = tasks::run_task(k + 1, &session.tasks[k], &session.registry);
                *slots[k].lock().expect("slot lock") = Some(record);
            });
        }
    });
    let records: Vec<TaskRecord> = slots
        .into_iter()
        .map(|s| s.into_inner().expect("slot lock").expect("every task ran"))
        .collect();
    Report {
        header: ReportHeader {
            tool: "gpw".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_sha256: session.digest.clone(),
            field: session.registry.field.to_string(),
        },
        summary: OutcomeCounts::tally(&records),
        tasks: records,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "field": 3,
        "algebras": [{ "name": "k", "kind": "ground" }]
    }"#;

    #[test]
    fn minimal_session_parses() {
        let s = parse_session(MINIMAL).unwrap();
        assert!(s.tasks.is_empty());
        assert!(matches!(s.registry.get("k"), Some(Entity::Algebra(_))));
    }

    #[test]
    fn empty_task_list_gives_empty_body() {
        let r = run_tasks(&parse_session(MINIMAL).unwrap());
        assert!(r.tasks.is_empty());
        assert_eq!(r.summary, OutcomeCounts::default());
    }

    #[test]
    fn unknown_task_reference_rejected() {
        let text = r#"{
            "field": 3,
            "algebras": [{ "name": "k", "kind": "ground" }],
            "tasks": [{ "task": "gpd", "module": "M", "profile": "p" }]
        }"#;
        match parse_session(text) {
            Err(SessionError::UnknownReference { name, .. }) => assert_eq!(name, "M"),
            other => panic!("expected unknown reference, got {other:?}"),
        }
    }

    #[test]
    fn unknown_key_rejected_with_location() {
        let text = "{\n  \"field\": 3,\n  \"colour\": 1\n}";
        match parse_session(text) {
            Err(SessionError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn non_automorphism_action_rejected() {
        // x ↦ 0 is not an automorphism of GF(3)[x]/(x²)
        let text = r#"{
            "field": 3,
            "algebras": [
                { "name": "S", "kind": "polynomial_quotient", "var": "x", "coeffs": [0, 0] },
                { "name": "R", "kind": "skew_group_ring", "base": "S", "group": { "cyclic": 2 },
                  "action": [[[1, 0], [0, 1]], [[1, 0], [0, 0]]] }
            ]
        }"#;
        assert!(matches!(parse_session(text), Err(SessionError::ValidationFailed { .. })));
    }

    #[test]
    fn master_session_parses() {
        let s = parse_session(MASTER_SESSION).unwrap();
        let names: std::collections::BTreeSet<&str> = s.tasks.iter().map(|t| t.name()).collect();
        assert_eq!(names.len(), 18);
    }
}

//! Task records and their two renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Ok,
    Refuted,
    Infeasible,
    Error,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Ok => "ok",
            Outcome::Refuted => "refuted",
            Outcome::Infeasible => "infeasible",
            Outcome::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskRecord {
    /// Position in the session's task list, from 1.
    pub index: usize,
    pub task: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub outcome: Outcome,
    pub summary: String,
    /// Audit payload: matrices, dimensions and certificates behind the outcome.
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportHeader {
    pub tool: String,
    pub version: String,
    pub input_sha256: String,
    pub field: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutcomeCounts {
    pub ok: usize,
    pub refuted: usize,
    pub infeasible: usize,
    pub error: usize,
}

impl OutcomeCounts {
    pub fn tally(tasks: &[TaskRecord]) -> Self {
        let mut c = Self::default();
        for t in tasks {
            match t.outcome {
                Outcome::Ok => c.ok += 1,
                Outcome::Refuted => c.refuted += 1,
                Outcome::Infeasible => c.infeasible += 1,
                Outcome::Error => c.error += 1,
            }
        }
        c
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub header: ReportHeader,
    pub tasks: Vec<TaskRecord>,
    pub summary: OutcomeCounts,
}

impl Report {
    pub fn has_errors(&self) -> bool {
        self.summary.error > 0
    }

    /// Structured output is pretty JSON with sorted keys; text output is one line per task
    /// plus the audit payload of every refuted or failed task.
    pub fn emit(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Structured => {
                // Value maps are ordered, so the round trip sorts every key
                let v = serde_json::to_value(self).expect("report serializes");
                let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
                s.push('\n');
                s
            }
            ReportFormat::Text => self.text(),
        }
    }

    pub fn from_structured(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    fn text(&self) -> String {
        let h = &self.header;
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", h.tool, h.version);
        let _ = writeln!(s, "input sha256 {}", h.input_sha256);
        let _ = writeln!(s, "field {}", h.field);
        for t in &self.tasks {
            let id = t.id.as_deref().map(|i| format!(" [{i}]")).unwrap_or_default();
            let _ = writeln!(s, "{:>3} {:<10} {}{}: {}", t.index, t.outcome.as_str(), t.task, id, t.summary);
            if matches!(t.outcome, Outcome::Refuted | Outcome::Error) {
                let detail = serde_json::to_string(&t.detail).expect("value serializes");
                let _ = writeln!(s, "    detail {detail}");
            }
        }
        let c = &self.summary;
        let _ = writeln!(
            s,
            "summary: {} ok, {} refuted, {} infeasible, {} error",
            c.ok, c.refuted, c.infeasible, c.error
        );
        s
    }
}

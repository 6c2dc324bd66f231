use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use swk_core::{BigCount, ExactRatio, Graph};

/// Significant digits in decimal renderings.
pub const DECIMAL_DIGITS: usize = 12;

#[derive(Debug, Serialize)]
pub struct GraphSummary {
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
}

impl GraphSummary {
    pub fn of(source: impl Into<String>, g: &Graph) -> Self {
        GraphSummary {
            source: source.into(),
            n: g.n(),
            m: g.m(),
            connected: g.is_connected(),
        }
    }
}

/// A named exact value. Integers and rationals are strings so JSON readers
/// never truncate them.
#[derive(Debug, Serialize)]
pub struct Quantity {
    pub name: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub holds: bool,
    pub left: String,
    pub relation: String,
    pub right: String,
    pub instances: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Failure {
    pub check: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub results: Vec<Quantity>,
    pub checks: Vec<CheckRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
    pub timing_ms: BTreeMap<String, f64>,
}

impl Report {
    pub fn new() -> Self {
        Report {
            graph: None,
            suite: None,
            results: Vec::new(),
            checks: Vec::new(),
            first_failure: None,
            timing_ms: BTreeMap::new(),
        }
    }

    pub fn integer(&mut self, name: impl Into<String>, value: &BigCount) {
        self.results.push(Quantity {
            name: name.into(),
            value: value.to_string(),
            decimal: None,
        });
    }

    pub fn ratio(&mut self, name: impl Into<String>, value: &ExactRatio) {
        self.results.push(Quantity {
            name: name.into(),
            value: value.to_string(),
            decimal: Some(value.to_decimal(DECIMAL_DIGITS)),
        });
    }

    pub fn flag(&mut self, name: impl Into<String>, value: impl ToString) {
        self.results.push(Quantity {
            name: name.into(),
            value: value.to_string(),
            decimal: None,
        });
    }

    /// Runs `f` and records its wall time under `stage`.
    pub fn timed<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        *self.timing_ms.entry(stage.to_string()).or_default() +=
            start.elapsed().as_secs_f64() * 1e3;
        out
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        if let Some(g) = &self.graph {
            let _ = writeln!(out, "graph: {} (n={}, m={}, connected={})", g.source, g.n, g.m, g.connected);
        }
        if let Some(s) = &self.suite {
            let _ = writeln!(out, "suite: {s}");
        }
        for q in &self.results {
            match &q.decimal {
                Some(d) => {
                    let _ = writeln!(out, "{} = {} (~{})", q.name, q.value, d);
                }
                None => {
                    let _ = writeln!(out, "{} = {}", q.name, q.value);
                }
            }
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                let mark = if c.holds { "ok  " } else { "FAIL" };
                let _ = write!(out, "  [{mark}] {}: {} {} {}", c.name, c.left, c.relation, c.right);
                if c.instances > 1 {
                    let _ = write!(out, " ({} instances)", c.instances);
                }
                if let Some(note) = &c.note {
                    let _ = write!(out, " [{note}]");
                }
                out.push('\n');
            }
        }
        if let Some(f) = &self.first_failure {
            let _ = writeln!(out, "first failure: {}: {}", f.check, f.detail);
            if let Some(g6) = &f.graph6 {
                let _ = writeln!(out, "  graph6: {g6}");
            }
        }
        if !self.timing_ms.is_empty() {
            let parts: Vec<String> = self
                .timing_ms
                .iter()
                .map(|(k, v)| format!("{k}={v:.1}ms"))
                .collect();
            let _ = writeln!(out, "timing: {}", parts.join(" "));
        }
        out
    }
}

//! JSON and text rendering of check reports.
//!
//! Exact values are always written as strings in the text syntax, so every
//! counterexample can be parsed back and replayed.

use dgalg_core::{CheckReport, Counterexample, Group};
use serde_json::{json, Map, Value};

use crate::syntax::{format_algebra, format_morphism};

/// A report attached to what it was run on (a derivation or map name).
#[derive(Debug, Clone)]
pub struct Entry {
    pub subject: Option<String>,
    pub report: CheckReport,
}

impl Entry {
    pub fn new(subject: Option<&str>, report: CheckReport) -> Self {
        Self { subject: subject.map(str::to_string), report }
    }
}

/// A rendered character table: `entries[i][j] = chi(rows[i], columns[j])`.
#[derive(Debug, Clone)]
pub struct Table {
    pub title: String,
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub entries: Vec<Vec<String>>,
    /// Nonzero column entries whose row lies outside the window.
    pub outside: usize,
}

/// Everything a command produces.
#[derive(Debug, Clone)]
pub struct Envelope {
    pub command: String,
    pub group: String,
    pub generators: Vec<String>,
    pub grading: Vec<i64>,
    pub mode: &'static str,
    pub seed: u64,
    pub window_size: usize,
    pub window_length: Option<u32>,
    pub entries: Vec<Entry>,
    pub tables: Vec<Table>,
}

impl Envelope {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.report.passed())
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_json(&self, group: &Group, timing_ms: u128) -> Value {
        let grading: Map<String, Value> =
            self.generators.iter().zip(&self.grading).map(|(g, d)| (g.clone(), json!(d))).collect();
        let mut out = json!({
            "schema": 1,
            "command": self.command,
            "status": self.status(),
            "group": self.group,
            "grading": grading,
            "mode": self.mode,
            "seed": self.seed,
            "window": {"size": self.window_size, "max_length": self.window_length},
            "reports": self.entries.iter().map(|e| entry_json(group, e)).collect::<Vec<_>>(),
            "timing_ms": timing_ms as u64,
        });
        if !self.tables.is_empty() {
            out["tables"] = self
                .tables
                .iter()
                .map(|t| {
                    json!({
                        "title": t.title,
                        "rows": t.rows,
                        "columns": t.columns,
                        "entries": t.entries,
                        "outside_window": t.outside,
                    })
                })
                .collect();
        }
        out
    }

    pub fn to_text(&self, group: &Group) -> String {
        let mut out = String::new();
        let grading: Vec<String> =
            self.generators.iter().zip(&self.grading).map(|(g, d)| format!("deg {g} = {d}")).collect();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("group: {} ({})\n", self.group, grading.join(", ")));
        match self.window_length {
            Some(l) => out.push_str(&format!("window: {} elements, word length <= {l}\n", self.window_size)),
            None => out.push_str(&format!("window: {} elements\n", self.window_size)),
        }
        out.push_str(&format!("mode: {}\nseed: {}\n", self.mode, self.seed));
        for e in &self.entries {
            let r = &e.report;
            let subject = e.subject.as_deref().map(|s| format!(" [{s}]")).unwrap_or_default();
            out.push_str(&format!(
                "{} {}{}: {} of {} examined, {} violations\n",
                r.status.as_str(),
                r.check,
                subject,
                r.examined,
                r.population,
                r.violations
            ));
            for note in &r.notes {
                out.push_str(&format!("  note: {note}\n"));
            }
            for c in &r.counterexamples {
                out.push_str(&format!("  counterexample: {}\n", counterexample_text(group, c)));
            }
        }
        for t in &self.tables {
            out.push_str(&render_table(t));
        }
        out.push_str(&format!("status: {}\n", self.status()));
        out
    }
}

fn entry_json(group: &Group, e: &Entry) -> Value {
    let r = &e.report;
    json!({
        "check": r.check,
        "subject": e.subject,
        "status": r.status.as_str(),
        "examined": r.examined,
        "population": r.population,
        "sampled": r.sampled(),
        "sampling_fraction": format!("{}/{}", r.examined, r.population),
        "violations": r.violations,
        "counterexamples": r.counterexamples.iter().map(|c| counterexample_json(group, c)).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

/// `kind` plus every field as a string in the text syntax.
pub fn counterexample_json(group: &Group, c: &Counterexample) -> Value {
    let el = |g| Value::String(group.format_element(g));
    let alg = |a| Value::String(format_algebra(group, a));
    let num = |c: &dgalg_core::GaussianRational| Value::String(c.to_string());
    let mor = |m| Value::String(format_morphism(group, m));
    let (kind, fields): (&str, Vec<(&str, Value)>) = match c {
        Counterexample::Degree { g, h, product, sum } => {
            ("degree", vec![("g", el(g)), ("h", el(h)), ("product", json!(product)), ("sum", json!(sum))])
        }
        Counterexample::RelatorDegree { relator, degree } => {
            ("relator-degree", vec![("relator", json!(relator)), ("degree", json!(degree))])
        }
        Counterexample::RelatorImage { relator, image } => {
            ("relator-image", vec![("relator", json!(relator)), ("image", el(image))])
        }
        Counterexample::RelatorValue { relator, value } => {
            ("relator-value", vec![("relator", json!(relator)), ("value", num(value))])
        }
        Counterexample::RelatorDerivation { relator, value } => {
            ("relator-derivation", vec![("relator", json!(relator)), ("value", alg(value))])
        }
        Counterexample::Leibniz { u, v, lhs, rhs } => {
            ("leibniz", vec![("u", el(u)), ("v", el(v)), ("lhs", alg(lhs)), ("rhs", alg(rhs))])
        }
        Counterexample::Additivity { first, second, composite, lhs, rhs } => (
            "additivity",
            vec![
                ("first", mor(first)),
                ("second", mor(second)),
                ("composite", mor(composite)),
                ("lhs", num(lhs)),
                ("rhs", num(rhs)),
            ],
        ),
        Counterexample::Loop { morphism, value } => ("loop", vec![("morphism", mor(morphism)), ("value", num(value))]),
        Counterexample::Groupoid { law, morphisms } => {
            ("groupoid", vec![("law", json!(law)), ("morphisms", morphisms.iter().map(mor).collect::<Vec<_>>().into())])
        }
        Counterexample::Tau { a, b, lhs, rhs } => {
            ("tau", vec![("a", el(a)), ("b", el(b)), ("lhs", num(lhs)), ("rhs", num(rhs))])
        }
        Counterexample::SquareZero { g, image } => ("square-zero", vec![("g", el(g)), ("image", alg(image))]),
        Counterexample::DegreeShift { h, g, coefficient, deg_h, deg_g } => (
            "degree-shift",
            vec![
                ("h", el(h)),
                ("g", el(g)),
                ("coefficient", num(coefficient)),
                ("deg_h", json!(deg_h)),
                ("deg_g", json!(deg_g)),
            ],
        ),
        Counterexample::CentralProduct { g, tau_g, tau_gz } => {
            ("central-product", vec![("g", el(g)), ("tau_g", num(tau_g)), ("tau_gz", num(tau_gz))])
        }
        Counterexample::Conjugation { g, x, lhs, rhs } => {
            ("conjugation", vec![("g", el(g)), ("x", el(x)), ("lhs", num(lhs)), ("rhs", num(rhs))])
        }
        Counterexample::NotMultiplicative { g, h } => ("not-multiplicative", vec![("g", el(g)), ("h", el(h))]),
        Counterexample::DegreeChange { g, image } => ("degree-change", vec![("g", el(g)), ("image", alg(image))]),
        Counterexample::Collision { g, h, image } => {
            ("collision", vec![("g", el(g)), ("h", el(h)), ("image", el(image))])
        }
        Counterexample::Unhit { generator } => {
            ("unhit", vec![("generator", json!(group.generator_names()[*generator]))])
        }
        Counterexample::Disagreement { g } => ("disagreement", vec![("g", el(g))]),
    };
    let mut map = Map::new();
    map.insert("kind".into(), json!(kind));
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

fn counterexample_text(group: &Group, c: &Counterexample) -> String {
    let Value::Object(map) = counterexample_json(group, c) else { unreachable!() };
    let mut parts = Vec::new();
    for (k, v) in &map {
        if k == "kind" {
            continue;
        }
        let v = match v {
            Value::String(s) => s.clone(),
            Value::Array(items) => {
                items.iter().map(|i| i.as_str().unwrap_or_default().to_string()).collect::<Vec<_>>().join(", ")
            }
            other => other.to_string(),
        };
        parts.push(format!("{k}={v}"));
    }
    format!("{} {}", map["kind"].as_str().unwrap_or_default(), parts.join(" "))
}

fn render_table(t: &Table) -> String {
    let mut out = format!("{} (rows x, columns h, entry chi(x, h))\n", t.title);
    let row_width = t.rows.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..t.columns.len())
        .map(|j| t.entries.iter().map(|r| r[j].len()).chain([t.columns[j].len()]).max().unwrap_or(0))
        .collect();
    out.push_str(&format!("{:row_width$}", ""));
    for (c, w) in t.columns.iter().zip(&widths) {
        out.push_str(&format!(" {c:>w$}"));
    }
    out.push('\n');
    for (r, row) in t.rows.iter().zip(&t.entries) {
        out.push_str(&format!("{r:row_width$}"));
        for (v, w) in row.iter().zip(&widths) {
            out.push_str(&format!(" {v:>w$}"));
        }
        out.push('\n');
    }
    if t.outside > 0 {
        out.push_str(&format!("{} nonzero entries have rows outside the window\n", t.outside));
    }
    out
}

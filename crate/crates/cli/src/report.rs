//! Command reports: human-readable text and a stable JSON form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use codim4_core::Report;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The outcome of one command. Timings are printed in text mode only, so
/// the JSON form is a function of the inputs and `--seed`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandReport {
    pub command: String,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
    pub values: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub document: Option<String>,
    #[serde(skip)]
    pub lines: Vec<String>,
    /// Values left out of the text form because `lines` already shows them.
    #[serde(skip)]
    pub json_only: BTreeSet<String>,
}

impl CommandReport {
    pub fn new(command: impl Into<String>) -> Self {
        CommandReport {
            command: command.into(),
            passed: true,
            checks: Vec::new(),
            values: BTreeMap::new(),
            document: None,
            lines: Vec::new(),
            json_only: BTreeSet::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(CheckRecord { name: name.into(), passed, detail: detail.into() });
    }

    pub fn absorb(&mut self, report: &Report) {
        for c in &report.checks {
            self.check(c.name.clone(), c.passed, c.detail.clone());
        }
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.to_string(), serde_json::to_value(v).expect("plain data serializes"));
    }

    pub fn json_value(&mut self, key: &str, v: impl Serialize) {
        self.json_only.insert(key.to_string());
        self.value(key, v);
    }

    /// Extra text-mode output such as table rows.
    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Text form. When a document is attached everything else is written as
    /// `#` comments, so the output can be fed back in as input.
    pub fn to_text(&self, quiet: bool, elapsed: Option<std::time::Duration>) -> String {
        let mut out = String::new();
        let prefix = if self.document.is_some() { "# " } else { "" };
        if quiet {
            match &self.document {
                Some(d) => out.push_str(d),
                None => writeln!(out, "{}", verdict(self.passed)).unwrap(),
            }
            return out;
        }
        for c in &self.checks {
            let mark = verdict(c.passed);
            if c.detail.is_empty() {
                writeln!(out, "{prefix}{mark} {}", c.name).unwrap();
            } else {
                writeln!(out, "{prefix}{mark} {}: {}", c.name, c.detail).unwrap();
            }
        }
        for (k, v) in self.values.iter().filter(|(k, _)| !self.json_only.contains(*k)) {
            writeln!(out, "{prefix}{k}: {}", compact(v)).unwrap();
        }
        for l in &self.lines {
            writeln!(out, "{prefix}{l}").unwrap();
        }
        writeln!(out, "{prefix}overall: {}", verdict(self.passed)).unwrap();
        if let Some(t) = elapsed {
            writeln!(out, "{prefix}elapsed: {:.3}s", t.as_secs_f64()).unwrap();
        }
        if let Some(d) = &self.document {
            out.push_str(d);
        }
        out
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

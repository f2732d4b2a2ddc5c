//! Structured command reports.
//!
//! Every scalar in a report is a string holding an exact integer, fraction,
//! polynomial or word, so the JSON form never carries floats and re-parses
//! to an identical document.

use std::fmt::{self, Display, Write as _};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: String,
    pub exit_code: u8,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub notes: Vec<String>,
    pub timing: Map<String, Value>,
}

/// A string scalar.
pub fn s(x: impl Display) -> Value {
    Value::String(x.to_string())
}

pub fn list<T: Display>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(s).collect())
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            status: String::new(),
            exit_code: 0,
            inputs: Map::new(),
            results: Map::new(),
            notes: Vec::new(),
            timing: Map::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.inputs.insert(key.into(), s(value));
        self
    }

    pub fn result(&mut self, key: &str, value: Value) -> &mut Self {
        self.results.insert(key.into(), value);
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// True when no value anywhere in the document is a JSON number other
    /// than the exit code, i.e. nothing could have been rendered as a float.
    pub fn is_exact(&self) -> bool {
        fn exact(v: &Value) -> bool {
            match v {
                Value::Number(_) => false,
                Value::Array(items) => items.iter().all(exact),
                Value::Object(map) => map.values().all(exact),
                _ => true,
            }
        }
        [&self.inputs, &self.results, &self.timing]
            .iter()
            .all(|m| m.values().all(exact))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "status: {} (exit {})", self.status, self.exit_code);
        for (title, map) in [("inputs", &self.inputs), ("results", &self.results), ("timing", &self.timing)] {
            if map.is_empty() {
                continue;
            }
            let _ = writeln!(out, "{title}:");
            for (k, v) in map {
                flatten(&mut out, k, v);
            }
        }
        if !self.notes.is_empty() {
            let _ = writeln!(out, "notes:");
            for n in &self.notes {
                let _ = writeln!(out, "  - {n}");
            }
        }
        out
    }
}

fn flatten(out: &mut String, path: &str, v: &Value) {
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                let _ = writeln!(out, "  {path}: {{}}");
            }
            for (k, child) in map {
                flatten(out, &format!("{path}.{k}"), child);
            }
        }
        Value::Array(items) if items.iter().all(|i| i.is_string()) => {
            let joined: Vec<&str> = items.iter().filter_map(Value::as_str).collect();
            let _ = writeln!(out, "  {path}: [{}]", joined.join(", "));
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                flatten(out, &format!("{path}[{i}]"), child);
            }
        }
        Value::String(x) => {
            let _ = writeln!(out, "  {path}: {x}");
        }
        other => {
            let _ = writeln!(out, "  {path}: {other}");
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_flattens_nested_values() {
        let mut r = Report::new("demo");
        r.status = "ok".into();
        r.result("roots", list(["0", "13/6"]));
        let mut inner = Map::new();
        inner.insert("a".into(), s(1));
        r.result("nested", Value::Array(vec![Value::Object(inner)]));
        let text = r.to_text();
        assert!(text.contains("  roots: [0, 13/6]"));
        assert!(text.contains("  nested[0].a: 1"));
        assert!(r.is_exact());
    }

    #[test]
    fn numbers_are_flagged() {
        let mut r = Report::new("demo");
        r.result("x", serde_json::json!(0.5));
        assert!(!r.is_exact());
    }
}

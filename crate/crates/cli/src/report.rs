//! Command output: an ordered tree of values rendered either as flat
//! `key: value` lines or as JSON.
//!
//! Nested keys are joined with `.` and list elements are addressed by
//! index, so `preimages.1.sheet: minus` in text mode corresponds to
//! `{"preimages": [_, {"sheet": "minus"}]}` in JSON mode.

use serde_json::{Map, Value};

/// Version tag carried by every report.
pub const SCHEMA: &str = "tritorus/1";

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    root: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut root = Map::new();
        root.insert("schema".into(), SCHEMA.into());
        root.insert("command".into(), command.into());
        Report { root }
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.root.insert(key.to_string(), value.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.root.get(key)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.root).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.root {
            flatten(k, v, &mut out);
        }
        out
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json() + "\n"
        } else {
            self.to_text()
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&format!("{prefix}.{k}"), v, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, out);
            }
        }
        Value::Array(items) if items.is_empty() => out.push_str(&format!("{prefix}: -\n")),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}: {}\n", parts.join(" ")));
        }
        _ => out.push_str(&format!("{prefix}: {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Builds a JSON object from ordered pairs.
pub fn object<K: Into<String>>(pairs: impl IntoIterator<Item = (K, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.into(), v)).collect())
}

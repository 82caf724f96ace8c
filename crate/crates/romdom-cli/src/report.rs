//! Report envelope and renderers.
//!
//! Every command produces one [`Report`]: a schema version, the instance
//! description, a list of result objects, and an overall consistency
//! verdict. JSON output round-trips through serde; CSV flattens each
//! result into `instance,result,field,value` rows; text prints the same
//! flattening as indented `key: value` lines.

use anyhow::Result;
use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Version stamp for the JSON output layout.
pub const SCHEMA_VERSION: u32 = 1;

/// The envelope every subcommand emits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub instance: String,
    pub results: Vec<Value>,
    pub consistency: bool,
}

impl Report {
    pub fn new(instance: impl Into<String>) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            instance: instance.into(),
            results: Vec::new(),
            consistency: true,
        }
    }

    /// Appends one result object, panicking only on unserializable types
    /// (which would be a bug in the caller, not bad input).
    pub fn push(&mut self, result: impl Serialize) {
        self.results
            .push(serde_json::to_value(result).expect("result serialization"));
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Text => Ok(self.render_text()),
        }
    }

    fn render_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["instance", "result", "field", "value"])?;
        for (i, result) in self.results.iter().enumerate() {
            for (field, value) in flatten(result) {
                w.write_record([&self.instance, &i.to_string(), &field, &value])?;
            }
        }
        w.write_record([
            &self.instance,
            &"".to_string(),
            &"consistency".to_string(),
            &self.consistency.to_string(),
        ])?;
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    fn render_text(&self) -> String {
        let mut out = format!("instance: {}\n", self.instance);
        for (i, result) in self.results.iter().enumerate() {
            out.push_str(&format!("result {}:\n", i));
            for (field, value) in flatten(result) {
                out.push_str(&format!("  {}: {}\n", field, value));
            }
        }
        out.push_str(&format!("consistency: {}\n", self.consistency));
        out
    }
}

/// Flattens a JSON value into dotted-key/value string pairs. Arrays of
/// scalars and any nested structures below the top two levels are kept
/// as compact JSON strings so CSV rows stay one line each.
fn flatten(value: &Value) -> Vec<(String, String)> {
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
    match value {
        Value::Object(map) => {
            let mut rows = Vec::new();
            for (k, v) in map {
                match v {
                    Value::Object(inner) => {
                        for (k2, v2) in inner {
                            rows.push((format!("{}.{}", k, k2), scalar_or_json(v2)));
                        }
                    }
                    other => rows.push((k.clone(), scalar_or_json(other))),
                }
            }
            rows
        }
        other => vec![("value".to_string(), scalar(other))],
    }
}

fn scalar_or_json(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(_) | Value::Array(_) => v.to_string(),
        other => other.to_string(),
    }
}

/// Output encodings selectable with `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

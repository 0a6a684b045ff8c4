//! Rendering of command results.

use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
    Dot,
}

/// Everything a command produced, before choosing a format.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub result: Value,
    pub provenance: Value,
    pub text: String,
    pub latex: Option<String>,
    pub dot: Option<String>,
    /// False when a verification inside the command failed.
    pub ok: bool,
}

impl Report {
    pub fn new(command: &str, result: Value, text: String) -> Self {
        Report {
            command: command.into(),
            result,
            provenance: json!({}),
            text,
            latex: None,
            dot: None,
            ok: true,
        }
    }

    pub fn provenance(mut self, p: Value) -> Self {
        self.provenance = p;
        self
    }

    pub fn latex(mut self, s: String) -> Self {
        self.latex = Some(s);
        self
    }

    pub fn dot(mut self, s: String) -> Self {
        self.dot = Some(s);
        self
    }

    pub fn ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn envelope(&self) -> Value {
        json!({
            "schemaVersion": SCHEMA_VERSION,
            "command": self.command,
            "result": self.result,
            "provenance": self.provenance,
        })
    }

    /// `None` when the command has no rendering in `format`.
    pub fn render(&self, format: Format) -> Option<String> {
        let mut out = match format {
            Format::Json => serde_json::to_string_pretty(&self.envelope()).expect("JSON value"),
            Format::Text => self.text.trim_end().to_string(),
            Format::Latex => self.latex.clone()?,
            Format::Dot => self.dot.clone()?,
        };
        out.push('\n');
        Some(out)
    }
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_and_formats() {
        let r = Report::new("rat", json!({ "num": [1] }), "1\n\n".into()).latex("1".into());
        let v: Value = serde_json::from_str(&r.render(Format::Json).unwrap()).unwrap();
        assert_eq!(v["schemaVersion"], SCHEMA_VERSION);
        assert_eq!(v["command"], "rat");
        assert_eq!(r.render(Format::Text).unwrap(), "1\n");
        assert_eq!(r.render(Format::Latex).unwrap(), "1\n");
        assert!(r.render(Format::Dot).is_none());
    }
}

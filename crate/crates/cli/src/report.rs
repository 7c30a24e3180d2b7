use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

/// Envelope shared by every command.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub tool_version: String,
    pub seed: Option<u64>,
    #[serde(skip)]
    pub internal: Option<String>,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value, result: Value, seed: Option<u64>) -> Self {
        Report {
            command,
            inputs,
            result,
            tool_version: format!("multibraid {}", env!("CARGO_PKG_VERSION")),
            seed,
            internal: None,
        }
    }

    /// Set when two deciders that must agree did not.
    pub fn internal_error(&self) -> Option<&str> {
        self.internal.as_deref()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} ({})", self.command, self.tool_version).unwrap();
        if let Some(seed) = self.seed {
            writeln!(out, "seed: {seed}").unwrap();
        }
        if let Some(rows) = self.result.get("classes").and_then(Value::as_array) {
            census_table(&mut out, rows);
            if let Some(summary) = self.result.get("summary") {
                flatten(&mut out, "summary", summary);
            }
        } else {
            flatten(&mut out, "", &self.result);
        }
        out
    }
}

fn census_table(out: &mut String, rows: &[Value]) {
    writeln!(out, "{:<18} {:>6} {:>5} {:<16} {:<16} oracle", "key", "count", "elim", "ordering", "degrees").unwrap();
    for r in rows {
        let cell = |k: &str| r.get(k).map(compact).unwrap_or_default();
        let oracle = r.get("oracle").filter(|v| !v.is_null()).map(|o| {
            format!("{} {}", o.get("status").map(compact).unwrap_or_default(), o.get("degrees").map(compact).unwrap_or_default())
        });
        writeln!(
            out,
            "{:<18} {:>6} {:>5} {:<16} {:<16} {}",
            cell("key"),
            cell("labeled_count"),
            cell("eliminable"),
            cell("ordering"),
            cell("tilde_degrees"),
            oracle.unwrap_or_else(|| "-".into())
        )
        .unwrap();
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn flatten(out: &mut String, prefix: &str, v: &Value) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, child) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(out, &key, child);
            }
        }
        _ => writeln!(out, "{prefix:<32} {}", compact(v)).unwrap(),
    }
}

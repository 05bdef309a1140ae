//! Output plumbing: format selection, the JSON report envelope, and CSV
//! emission (header row, comma-separated, LF endings, no quoting).

use clap::ValueEnum;
use serde_json::{json, Value};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable table.
    Table,
    Csv,
    Json,
}

/// JSON report envelope. Timing and host info live under "meta", which is
/// excluded from determinism comparisons.
pub fn json_report(command: &str, params: Value, results: Value, started: Instant) -> String {
    let v = json!({
        "schema_version": 1,
        "command": command,
        "params": params,
        "results": results,
        "meta": {
            "wall_ms": started.elapsed().as_millis() as u64,
        },
    });
    serde_json::to_string_pretty(&v).expect("envelope serializes")
}

pub struct Csv {
    buf: String,
}

impl Csv {
    pub fn new(header: &str) -> Csv {
        let mut buf = String::new();
        buf.push_str(header);
        buf.push('\n');
        Csv { buf }
    }

    pub fn row(&mut self, fields: &[String]) {
        self.buf.push_str(&fields.join(","));
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

/// Render an f64 for CSV/JSON string fields: shortest round-trip form.
pub fn num(v: f64) -> String {
    format!("{v}")
}

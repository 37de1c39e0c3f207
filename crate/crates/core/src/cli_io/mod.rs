//! Plot-ready tables and their CSV / JSON serialization.
//!
//! Every command produces a [`Payload`]: a manifest, an optional key/value
//! summary, and one table with a fixed column order. Rendering is a pure
//! function of the payload, the format and the precision, so identical
//! manifests give byte-identical output.
//!
//! CSV layout:
//!
//! ```text
//! # command: <name>
//! # tool_version: <version>
//! # seed: <seed>                 (only when the command is seeded)
//! # param <key>: <value>         (one line per parameter, sorted by key)
//! key,value                      (summary section, only when non-empty)
//! <key>,<value>
//!                                (blank line separating the sections)
//! <column>,<column>,...
//! <value>,<value>,...
//! ```
//!
//! JSON layout: `{"manifest": {...}, "summary": {...}, "columns": [...], "rows": [[...]]}`.

mod commands;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub use commands::{
    density_payload, pi_payload, rigidity_payload, sample_payload, shell_payload, MSpec,
    RIGIDITY_COLUMNS,
};

pub const DEFAULT_PRECISION: u8 = 15;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
/// Environment variable bounding the worker threads used for table rows.
pub const THREADS_ENV: &str = "WALLIS_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Destination {
    #[default]
    Stdout,
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputSpec {
    pub format: Format,
    pub destination: Destination,
    precision: u8,
}

impl OutputSpec {
    pub fn new(format: Format, destination: Destination, precision: u8) -> Result<Self> {
        if !(1..=17).contains(&precision) {
            return Err(Error::InvalidInput(format!(
                "precision must be between 1 and 17 significant digits, got {precision}"
            )));
        }
        Ok(Self {
            format,
            destination,
            precision,
        })
    }

    pub fn precision(&self) -> u8 {
        self.precision
    }
}

impl Default for OutputSpec {
    fn default() -> Self {
        Self {
            format: Format::Csv,
            destination: Destination::Stdout,
            precision: DEFAULT_PRECISION,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tool_version: String,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_owned(),
            parameters: BTreeMap::new(),
            seed: None,
            tool_version: TOOL_VERSION.to_owned(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_owned(), value.into());
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// One table cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Bool(bool),
    Empty,
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Float)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Payload {
    pub manifest: RunManifest,
    pub summary: Vec<(String, Cell)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

/// Round to `precision` significant digits, then print the shortest string
/// that reads back to that rounded value.
pub fn format_number(x: f64, precision: u8) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    format!("{:?}", round_significant(x, precision))
}

fn round_significant(x: f64, precision: u8) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let digits = usize::from(precision.clamp(1, 17)) - 1;
    format!("{x:.digits$e}").parse().expect("formatted float parses")
}

fn cell_csv(cell: &Cell, precision: u8) -> String {
    match cell {
        Cell::Int(v) => v.to_string(),
        Cell::Float(v) => format_number(*v, precision),
        Cell::Bool(v) => v.to_string(),
        Cell::Empty => String::new(),
    }
}

fn cell_json(cell: &Cell, precision: u8) -> Value {
    match cell {
        Cell::Int(v) => json!(v),
        Cell::Float(v) if v.is_finite() => json!(round_significant(*v, precision)),
        Cell::Float(_) | Cell::Empty => Value::Null,
        Cell::Bool(v) => json!(v),
    }
}

impl Payload {
    pub fn render(&self, format: Format, precision: u8) -> String {
        match format {
            Format::Csv => self.render_csv(precision),
            Format::Json => self.render_json(precision),
        }
    }

    fn render_csv(&self, precision: u8) -> String {
        let mut out = String::new();
        let m = &self.manifest;
        let _ = writeln!(out, "# command: {}", m.command);
        let _ = writeln!(out, "# tool_version: {}", m.tool_version);
        if let Some(seed) = m.seed {
            let _ = writeln!(out, "# seed: {seed}");
        }
        for (k, v) in &m.parameters {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "# param {k}: {v}");
        }
        if !self.summary.is_empty() {
            out.push_str("key,value\n");
            for (k, v) in &self.summary {
                let _ = writeln!(out, "{k},{}", cell_csv(v, precision));
            }
            out.push('\n');
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|c| cell_csv(c, precision)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self, precision: u8) -> String {
        let summary: serde_json::Map<String, Value> = self
            .summary
            .iter()
            .map(|(k, v)| (k.clone(), cell_json(v, precision)))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(|c| cell_json(c, precision)).collect()))
            .collect();
        let doc = json!({
            "manifest": self.manifest,
            "summary": summary,
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("payload serializes");
        s.push('\n');
        s
    }
}

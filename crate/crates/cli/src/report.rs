//! Deterministic report rendering: JSON with lexicographic keys, RFC-4180
//! style CSV, and space-padded text tables. Identical documents render to
//! identical bytes; nothing time- or locale-dependent is emitted.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// One report value. Integers render in base 10, rationals as `p/q` in
/// lowest terms (never as decimals), booleans as `true`/`false`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Int(BigInt),
    Rat(Ratio<BigInt>),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            // Integers that fit a JSON number are numbers; anything larger
            // degrades to its decimal string.
            Cell::Int(v) => match v.to_i64() {
                Some(n) => Value::from(n),
                None => Value::String(v.to_string()),
            },
            Cell::Rat(v) => Value::String(v.to_string()),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Empty => Value::Null,
        }
    }

    fn render(&self, empty: &str) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Rat(v) => v.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => empty.to_string(),
        }
    }
}

impl From<&BigInt> for Cell {
    fn from(v: &BigInt) -> Self {
        Cell::Int(v.clone())
    }
}

impl From<BigInt> for Cell {
    fn from(v: BigInt) -> Self {
        Cell::Int(v)
    }
}

impl From<Ratio<BigInt>> for Cell {
    fn from(v: Ratio<BigInt>) -> Self {
        Cell::Rat(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

/// A rendered command result: the echoed inputs, a rectangular row set, and
/// document-level flags.
#[derive(Debug, Clone)]
pub struct ReportDocument {
    pub command: &'static str,
    pub inputs: BTreeMap<&'static str, Cell>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub flags: Vec<&'static str>,
}

impl ReportDocument {
    pub fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Self {
            command,
            inputs: BTreeMap::new(),
            columns,
            rows: Vec::new(),
            flags: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &'static str, value: impl Into<Cell>) -> &mut Self {
        self.inputs.insert(key, value.into());
        self
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Table => self.render_table(),
        }
    }

    fn render_json(&self) -> String {
        // serde_json::Map is a BTreeMap, so keys come out lexicographically
        // sorted at every level.
        let mut root = Map::new();
        root.insert("command".into(), Value::String(self.command.into()));
        root.insert(
            "flags".into(),
            Value::Array(
                self.flags
                    .iter()
                    .map(|f| Value::String((*f).into()))
                    .collect(),
            ),
        );
        let mut inputs = Map::new();
        for (k, v) in &self.inputs {
            inputs.insert((*k).into(), v.to_json());
        }
        root.insert("inputs".into(), Value::Object(inputs));
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (col, cell) in self.columns.iter().zip(row) {
                    obj.insert((*col).into(), cell.to_json());
                }
                Value::Object(obj)
            })
            .collect();
        root.insert("rows".into(), Value::Array(rows));
        root.insert(
            "schema_version".into(),
            Value::String(SCHEMA_VERSION.into()),
        );
        let mut out = Value::Object(root).to_string();
        out.push('\n');
        out
    }

    fn render_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|c| c.render("")).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    fn render_table(&self) -> String {
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|c| c.render("-")).collect())
            .collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &rendered {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut out = String::new();
        let emit = |out: &mut String, cells: Vec<&str>| {
            let mut line = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                let pad = widths[i] - cell.len();
                line.push_str(&" ".repeat(pad));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        };
        emit(&mut out, self.columns.to_vec());
        for row in &rendered {
            emit(&mut out, row.iter().map(String::as_str).collect());
        }
        out
    }
}

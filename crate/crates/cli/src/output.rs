//! Rendering of command results. Every command produces one JSON value;
//! table and CSV are flattened from it so all formats carry the same numbers.

use std::io::Write;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// A command result. `rows`, when set, replaces the flattened `json` as the
/// tabular view (for results that are naturally a list inside an object).
pub struct Output {
    pub json: Value,
    pub rows: Option<Vec<Value>>,
}

impl Output {
    pub fn new(json: Value) -> Self {
        Output { json, rows: None }
    }

    pub fn with_rows(json: Value, rows: Vec<Value>) -> Self {
        Output { json, rows: Some(rows) }
    }

    pub fn render(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer(&mut *out, &self.json)?;
                writeln!(out)
            }
            Format::Table => {
                let (header, rows) = self.grid();
                write_table(out, &header, &rows)
            }
            Format::Csv => {
                let (header, rows) = self.grid();
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&header)?;
                for row in rows {
                    w.write_record(&row)?;
                }
                w.flush()
            }
        }
    }

    fn grid(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let rows: Vec<Value> = match (&self.rows, &self.json) {
            (Some(rows), _) => rows.clone(),
            (None, Value::Array(items)) => items.clone(),
            (None, other) => vec![other.clone()],
        };
        let flat: Vec<Vec<(String, String)>> = rows.iter().map(flatten).collect();
        let header: Vec<String> = flat
            .first()
            .map(|r| r.iter().map(|(k, _)| k.clone()).collect())
            .unwrap_or_default();
        let cells = flat.into_iter().map(|r| r.into_iter().map(|(_, v)| v).collect()).collect();
        (header, cells)
    }
}

fn flatten(v: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    match v {
        Value::Object(map) => flatten_into(map, "", &mut out),
        other => out.push(("value".to_string(), cell(other))),
    }
    out
}

fn flatten_into(map: &Map<String, Value>, prefix: &str, out: &mut Vec<(String, String)>) {
    for (k, v) in map {
        let key = format!("{prefix}{k}");
        match v {
            Value::Object(inner) => flatten_into(inner, &format!("{key}."), out),
            other => out.push((key, cell(other))),
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

fn write_table(out: &mut impl Write, header: &[String], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(header))?;
    writeln!(out, "{}", widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("  "))?;
    for row in rows {
        writeln!(out, "{}", line(row))?;
    }
    Ok(())
}

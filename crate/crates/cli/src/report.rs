//! Output documents and their three renderings.

use std::fmt::Write as _;

use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// Format of the emitted document.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// A command's output: metadata, fixed columns, rows and an optional
/// summary block. Rows hold one value per column.
#[derive(Clone, Debug)]
pub struct Report {
    pub metadata: Map<String, Value>,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<Value>>,
    pub summary: Option<(&'static str, Map<String, Value>)>,
    /// Extra top-level blocks of the JSON document, shown as comment lines
    /// in the other formats.
    pub appendix: Option<(&'static str, Map<String, Value>)>,
}

impl Report {
    pub fn new(command: &'static str, columns: &'static [&'static str]) -> Self {
        let mut metadata = Map::new();
        metadata.insert("tool".into(), "unip".into());
        metadata.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        metadata.insert("command".into(), command.into());
        Self {
            metadata,
            columns,
            rows: Vec::new(),
            summary: None,
            appendix: None,
        }
    }

    pub fn meta(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_value(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .map(|c| c.to_string())
                    .zip(row.iter().cloned())
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("schema_version".into(), SCHEMA_VERSION.into());
        doc.insert("metadata".into(), Value::Object(self.metadata.clone()));
        doc.insert(
            "columns".into(),
            self.columns.iter().map(|c| Value::from(*c)).collect(),
        );
        doc.insert("rows".into(), Value::Array(rows));
        if let Some((key, block)) = &self.summary {
            doc.insert((*key).into(), Value::Object(block.clone()));
        }
        if let Some((key, block)) = &self.appendix {
            doc.insert((*key).into(), Value::Object(block.clone()));
        }
        Value::Object(doc)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => render_json(&self.to_value()),
            Format::Csv => self.render_csv(),
            Format::Table => self.render_table(),
        }
    }

    fn comment_lines(&self) -> Vec<String> {
        let mut out = vec![format!("schema_version: {SCHEMA_VERSION}")];
        for (k, v) in &self.metadata {
            out.push(format!("{k}: {}", cell(v)));
        }
        if let Some((key, block)) = &self.summary {
            for (k, v) in block {
                out.push(format!("{key}.{k}: {}", cell(v)));
            }
        }
        if let Some((key, block)) = &self.appendix {
            for (k, v) in block {
                out.push(format!("{key}.{k}: {}", cell(v)));
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        for line in self.comment_lines() {
            writeln!(out, "# {line}").unwrap();
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(cell))
                .expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8"));
        out
    }

    fn render_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(cell).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(k, c)| {
                cells
                    .iter()
                    .map(|r| r[k].len())
                    .chain([c.len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |items: Vec<&str>| {
            let mut s = items
                .iter()
                .zip(&widths)
                .map(|(x, w)| format!("{x:<w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            s.truncate(s.trim_end().len());
            s
        };
        let mut out = String::new();
        for l in self.comment_lines() {
            writeln!(out, "{l}").unwrap();
        }
        out.push('\n');
        writeln!(out, "{}", line(self.columns.to_vec())).unwrap();
        let rules: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        writeln!(out, "{}", line(rules.iter().map(String::as_str).collect())).unwrap();
        for r in &cells {
            writeln!(out, "{}", line(r.iter().map(String::as_str).collect())).unwrap();
        }
        out
    }
}

pub fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Text form of a value inside a csv or table cell. Scalars are written
/// bare, arrays of scalars joined by spaces, anything else as compact json.
pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(_) | Value::Number(_) => v.to_string(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(" ")
        }
        _ => v.to_string(),
    }
}

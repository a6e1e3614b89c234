use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

use crate::args::Format;

/// One output value.
#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
    Pair(f64, f64),
}

/// A keyed record, optionally followed by a table of rows.
#[derive(Debug, Default)]
pub struct Report {
    pub fields: Vec<(&'static str, Cell)>,
    pub table: Option<Table>,
}

#[derive(Debug)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn field(mut self, key: &'static str, value: Cell) -> Self {
        self.fields.push((key, value));
        self
    }
}

/// 17 significant digits, enough to round-trip an f64.
pub fn number(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

fn json_number(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(Number::from_str(&number(x)).expect("formatted float is valid JSON"))
    } else {
        Value::String(number(x))
    }
}

fn json_cell(c: &Cell) -> Value {
    match c {
        Cell::Num(x) => json_number(*x),
        Cell::Int(i) => Value::from(*i),
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Bool(b) => Value::Bool(*b),
        Cell::Pair(a, b) => Value::Array(vec![json_number(*a), json_number(*b)]),
    }
}

fn text_cell(c: &Cell) -> String {
    match c {
        Cell::Num(x) => number(*x),
        Cell::Int(i) => i.to_string(),
        Cell::Text(s) => s.clone(),
        Cell::Bool(b) => b.to_string(),
        Cell::Pair(a, b) => format!("[{}, {}]", number(*a), number(*b)),
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Csv => csv(report),
        Format::Table => table(report),
    }
}

fn json(report: &Report) -> String {
    let mut obj = Map::new();
    for (k, v) in &report.fields {
        obj.insert((*k).to_string(), json_cell(v));
    }
    if let Some(t) = &report.table {
        let rows = t
            .rows
            .iter()
            .map(|row| {
                let mut m = Map::new();
                for (c, v) in t.columns.iter().zip(row) {
                    m.insert((*c).to_string(), json_cell(v));
                }
                Value::Object(m)
            })
            .collect();
        obj.insert(t.name.to_string(), Value::Array(rows));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON values serialize");
    s.push('\n');
    s
}

// A report with a table is written as the table alone; otherwise the
// record becomes a header and one row, with pairs split into _lo/_hi.
fn csv(report: &Report) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let write = |w: &mut csv::Writer<Vec<u8>>, rec: Vec<String>| {
        w.write_record(rec).expect("writing to memory cannot fail");
    };
    match &report.table {
        Some(t) => {
            write(&mut w, t.columns.iter().map(|c| c.to_string()).collect());
            for row in &t.rows {
                write(&mut w, row.iter().map(text_cell).collect());
            }
        }
        None => {
            let mut header = Vec::new();
            let mut values = Vec::new();
            for (k, v) in &report.fields {
                if let Cell::Pair(a, b) = v {
                    header.push(format!("{k}_lo"));
                    header.push(format!("{k}_hi"));
                    values.push(number(*a));
                    values.push(number(*b));
                } else {
                    header.push(k.to_string());
                    values.push(text_cell(v));
                }
            }
            write(&mut w, header);
            write(&mut w, values);
        }
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("CSV output is UTF-8")
}

fn table(report: &Report) -> String {
    let mut out = String::new();
    let width = report.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in &report.fields {
        let _ = writeln!(out, "{k:<width$}  {}", text_cell(v));
    }
    if let Some(t) = &report.table {
        if !report.fields.is_empty() {
            out.push('\n');
        }
        let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(text_cell).collect()).collect();
        let widths: Vec<usize> = t
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let line = |items: Vec<&str>| {
            items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let _ = writeln!(out, "{}", line(t.columns.clone()));
        for r in &cells {
            let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
        }
    }
    out
}

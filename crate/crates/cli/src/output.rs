//! Rendering of result tables as text, CSV or JSON.

use std::io::Write;
use std::path::PathBuf;

use clap::ValueEnum;
use serde_json::{json, Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct OutputSpec {
    pub format: Format,
    /// Decimal digits, 1 to 17.
    pub precision: usize,
    pub out: Option<PathBuf>,
}

/// One table entry. Reals are rounded half-to-even to the requested number
/// of digits after the decimal point, in fixed or scientific notation.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Fixed(f64),
    Sci(f64),
    Int(u64),
    Signed(i64),
    Bool(bool),
    Text(String),
    Null,
    List(Vec<Cell>),
    Map(Vec<(String, Cell)>),
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as u64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Null, Into::into)
    }
}

/// Rows plus the column groups shown in text mode. Text mode prints each
/// group as its own tab-separated table; CSV and JSON always carry every
/// column.
#[derive(Debug, Clone)]
pub struct Report {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub text_sections: Vec<Vec<usize>>,
}

impl Report {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        let columns: Vec<String> = columns.into_iter().map(Into::into).collect();
        let all = (0..columns.len()).collect();
        Report {
            columns,
            rows: Vec::new(),
            text_sections: vec![all],
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

fn strip_negative_zero(s: String) -> String {
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

/// Fixed notation with `digits` decimals. `std` formats the exact binary
/// value, so ties are broken to even.
pub fn fixed(v: f64, digits: usize) -> String {
    strip_negative_zero(format!("{v:.digits$}"))
}

pub fn sci(v: f64, digits: usize) -> String {
    format!("{v:.digits$e}")
}

fn non_finite_text(v: f64) -> &'static str {
    if v.is_nan() {
        "NaN"
    } else if v > 0.0 {
        "∞"
    } else {
        "-∞"
    }
}

fn flat(cell: &Cell, digits: usize, format: Format) -> String {
    match cell {
        Cell::Fixed(v) | Cell::Sci(v) if !v.is_finite() => match format {
            Format::Text => non_finite_text(*v).to_string(),
            _ => String::new(),
        },
        Cell::Fixed(v) => fixed(*v, digits),
        Cell::Sci(v) => sci(*v, digits),
        Cell::Int(n) => n.to_string(),
        Cell::Signed(n) => n.to_string(),
        Cell::Bool(b) => b.to_string(),
        Cell::Text(s) => s.clone(),
        Cell::Null => match format {
            Format::Text => "-".to_string(),
            _ => String::new(),
        },
        Cell::List(items) => items
            .iter()
            .map(|c| flat(c, digits, format))
            .collect::<Vec<_>>()
            .join(";"),
        Cell::Map(entries) => entries
            .iter()
            .map(|(k, c)| format!("{k}={}", flat(c, digits, format)))
            .collect::<Vec<_>>()
            .join(";"),
    }
}

fn rounded_number(text: &str) -> Value {
    text.parse::<f64>()
        .ok()
        .and_then(Number::from_f64)
        .map_or(Value::Null, Value::Number)
}

fn to_json(cell: &Cell, digits: usize) -> Value {
    match cell {
        Cell::Fixed(v) | Cell::Sci(v) if !v.is_finite() => Value::Null,
        Cell::Fixed(v) => rounded_number(&fixed(*v, digits)),
        Cell::Sci(v) => rounded_number(&sci(*v, digits)),
        Cell::Int(n) => json!(n),
        Cell::Signed(n) => json!(n),
        Cell::Bool(b) => json!(b),
        Cell::Text(s) => json!(s),
        Cell::Null => Value::Null,
        Cell::List(items) => Value::Array(items.iter().map(|c| to_json(c, digits)).collect()),
        Cell::Map(entries) => Value::Object(
            entries
                .iter()
                .map(|(k, c)| (k.clone(), to_json(c, digits)))
                .collect(),
        ),
    }
}

pub fn render_text(report: &Report, digits: usize) -> String {
    let mut out = String::new();
    for (i, section) in report.text_sections.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let header: Vec<&str> = section.iter().map(|&c| report.columns[c].as_str()).collect();
        out.push_str(&header.join("\t"));
        out.push('\n');
        for row in &report.rows {
            let cells: Vec<String> = section
                .iter()
                .map(|&c| flat(&row[c], digits, Format::Text))
                .collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
    }
    out
}

pub fn render_csv(report: &Report, digits: usize) -> anyhow::Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(&report.columns)?;
    for row in &report.rows {
        w.write_record(row.iter().map(|c| flat(c, digits, Format::Csv)))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn render_json(report: &Report, digits: usize, meta: Value) -> anyhow::Result<String> {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> = report
                .columns
                .iter()
                .zip(row)
                .map(|(k, c)| (k.clone(), to_json(c, digits)))
                .collect();
            Value::Object(obj)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&json!({ "meta": meta, "rows": rows }))?;
    s.push('\n');
    Ok(s)
}

pub fn emit(report: &Report, spec: &OutputSpec, meta: Value) -> anyhow::Result<()> {
    let text = match spec.format {
        Format::Text => render_text(report, spec.precision),
        Format::Csv => render_csv(report, spec.precision)?,
        Format::Json => render_json(report, spec.precision, meta)?,
    };
    match &spec.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_even_rounding() {
        assert_eq!(fixed(0.125, 2), "0.12");
        assert_eq!(fixed(0.375, 2), "0.38");
        assert_eq!(fixed(2.5, 0), "2");
        assert_eq!(fixed(1.5, 0), "2");
        assert_eq!(fixed(1.209199576, 5), "1.20920");
        assert_eq!(fixed(-1e-9, 5), "0.00000");
        assert_eq!(fixed(-0.5, 3), "-0.500");
    }

    #[test]
    fn infinity_per_format() {
        let mut r = Report::new(["x", "artanh_p"]);
        r.push(vec![Cell::Fixed(1.0), Cell::Fixed(f64::INFINITY)]);
        assert_eq!(render_text(&r, 5), "x\tartanh_p\n1.00000\t∞\n");
        assert_eq!(render_csv(&r, 5).unwrap(), "x,artanh_p\n1.00000,\n");
        let j: Value = serde_json::from_str(&render_json(&r, 5, json!({})).unwrap()).unwrap();
        assert_eq!(j["rows"][0]["artanh_p"], Value::Null);
        assert_eq!(j["rows"][0]["x"], json!(1.0));
    }

    #[test]
    fn csv_quotes_commas() {
        let mut r = Report::new(["id", "description"]);
        r.push(vec!["a".into(), "x, y".into()]);
        assert_eq!(render_csv(&r, 5).unwrap(), "id,description\na,\"x, y\"\n");
    }

    #[test]
    fn text_sections_split_tables() {
        let mut r = Report::new(["x", "f", "g"]);
        r.text_sections = vec![vec![0, 1], vec![0, 2]];
        r.push(vec![Cell::Fixed(0.5), Cell::Fixed(1.0), Cell::Sci(2.0)]);
        assert_eq!(render_text(&r, 2), "x\tf\n0.50\t1.00\n\nx\tg\n0.50\t2.00e0\n");
    }

    #[test]
    fn nested_cells() {
        let c = Cell::Map(vec![("p".into(), Cell::Fixed(1.1)), ("x".into(), Cell::Fixed(0.5))]);
        assert_eq!(flat(&c, 1, Format::Csv), "p=1.1;x=0.5");
        assert_eq!(to_json(&c, 1), json!({"p": 1.1, "x": 0.5}));
        let l = Cell::List(vec![Cell::Signed(-1), Cell::Signed(1)]);
        assert_eq!(flat(&l, 1, Format::Text), "-1;1");
    }
}

//! Deterministic CSV/JSON emission. Reals are printed with 12 significant digits.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::{Map, Value};

use crate::config::OutputFormat;
use crate::error::{AppError, AppResult};

/// `x` rounded to 12 significant digits, without trailing zeros.
pub fn fmt12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        // rounding can carry into a new digit (9.99...9 -> 10.0), which only adds a zero
        let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    } else {
        let s = format!("{x:.11e}");
        let (mant, e) = s.split_once('e').expect("exponent form");
        let mant = mant.trim_end_matches('0').trim_end_matches('.');
        format!("{mant}e{e}")
    }
}

/// `x` as a JSON number carrying the same 12 digits as [`fmt12`]; non-finite values become null.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = fmt12(x).parse().expect("fmt12 output parses");
    serde_json::Number::from_f64(rounded).map(Value::Number).unwrap_or(Value::Null)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Real(f64),
    Int(u64),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Real(x) => fmt12(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Real(x) => num(*x),
            Cell::Int(n) => Value::from(*n),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Real(x)
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        Cell::Int(n)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Real)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table { headers, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, w: W) -> AppResult<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(&self.headers)?;
        for r in &self.rows {
            out.write_record(r.iter().map(Cell::csv))?;
        }
        out.flush().map_err(|e| AppError::Output(e.to_string()))?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let obj: Map<String, Value> =
                        self.headers.iter().zip(r).map(|(h, c)| (h.to_string(), c.json())).collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn write(&self, format: OutputFormat, dest: Option<&Path>) -> AppResult<()> {
        match format {
            OutputFormat::Csv => with_sink(dest, |w| self.write_csv(w)),
            OutputFormat::Json => write_json(&self.to_json(), dest),
        }
    }
}

/// Pretty JSON with a trailing newline to a file or stdout.
pub fn write_json(value: &Value, dest: Option<&Path>) -> AppResult<()> {
    with_sink(dest, |mut w| {
        serde_json::to_writer_pretty(&mut w, value)?;
        writeln!(w).map_err(|e| AppError::Output(e.to_string()))?;
        w.flush().map_err(|e| AppError::Output(e.to_string()))
    })
}

fn with_sink(dest: Option<&Path>, f: impl FnOnce(Box<dyn Write>) -> AppResult<()>) -> AppResult<()> {
    match dest {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|e| AppError::io(dir, e))?;
            }
            let file = File::create(path).map_err(|e| AppError::io(path, e))?;
            f(Box::new(BufWriter::new(file)))
        }
        None => f(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

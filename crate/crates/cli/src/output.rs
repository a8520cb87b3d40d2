use crate::args::{Format, OutputArgs};
use crate::CliError;
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

/// Version of every CSV and JSON schema emitted by this build.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    /// Input parameter; printed as given whatever the precision.
    Param(f64),
    Text(String),
    Bool(bool),
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl Cell {
    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            // Non-finite values have no JSON number; they are written as null.
            Cell::Float(v) | Cell::Param(v) => json!(v),
            Cell::Text(v) => json!(v),
            Cell::Bool(v) => json!(v),
        }
    }

    fn csv(&self, digits: Option<usize>) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => match digits {
                Some(d) => significant(*v, d),
                None => v.to_string(),
            },
            Cell::Param(v) => v.to_string(),
            Cell::Text(v) => v.clone(),
            Cell::Bool(v) => v.to_string(),
        }
    }
}

/// `x` rounded to `digits` significant digits in fixed notation, switching
/// to scientific notation outside `[1e-4, 1e15)`.
pub fn significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..15).contains(&mag) {
        return format!("{:.*e}", digits - 1, x);
    }
    // Rounding may carry into the next decade (9.9996 -> 10.00).
    let decimals = (digits as i32 - 1 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let rounded: f64 = s.parse().unwrap_or(x);
    let mag2 = rounded.abs().log10().floor() as i32;
    if mag2 > mag && decimals > 0 {
        format!("{x:.*}", decimals - 1)
    } else {
        s
    }
}

/// Rows under a fixed header.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Significant digits used in CSV when `--precision` is absent.
    pub default_digits: Option<usize>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
            default_digits: None,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| *c == name)
    }

    /// Float value at `(row, column)`.
    pub fn float(&self, row: usize, name: &str) -> Option<f64> {
        match self.rows.get(row)?.get(self.column(name)?)? {
            Cell::Float(v) | Cell::Param(v) => Some(*v),
            Cell::Int(v) => Some(*v as f64),
            _ => None,
        }
    }

    fn json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let mut obj = Map::new();
                    for (c, v) in self.columns.iter().zip(r) {
                        obj.insert(c.to_string(), v.json());
                    }
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn write_csv<W: Write>(&self, w: W, precision: Option<usize>) -> csv::Result<()> {
        let digits = precision.or(self.default_digits);
        let mut out = csv::Writer::from_writer(w);
        out.write_record(&self.columns)?;
        for r in &self.rows {
            out.write_record(r.iter().map(|c| c.csv(digits)))?;
        }
        out.flush()?;
        Ok(())
    }
}

/// Result of one command.
#[derive(Debug, Clone)]
pub struct Report {
    /// Schema name, e.g. `eigs`.
    pub kind: &'static str,
    pub table: Table,
    pub summary: Option<Value>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub schema: String,
    pub command: String,
    pub parameters: Value,
    pub version: &'static str,
    pub seed: Option<u64>,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Value>,
}

impl Manifest {
    pub fn new(report: &Report, command: &str, parameters: Value) -> Self {
        Manifest {
            schema: schema_name(report.kind),
            command: command.to_string(),
            parameters,
            version: env!("CARGO_PKG_VERSION"),
            seed: report.seed,
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
            summary: report.summary.clone(),
        }
    }
}

pub fn schema_name(kind: &str) -> String {
    format!("steklov/{kind}/v{SCHEMA_VERSION}")
}

/// The JSON document of a run: manifest, rows and optional summary.
pub fn json_document(report: &Report, manifest: &Manifest) -> Value {
    let mut doc = json!({
        "schema": schema_name(report.kind),
        "manifest": manifest,
        "columns": report.table.columns,
        "rows": report.table.json_rows(),
    });
    if let Some(s) = &report.summary {
        doc["summary"] = s.clone();
    }
    doc
}

/// Write the report as requested and return the bytes written to stdout.
pub fn emit(report: &Report, manifest: &Manifest, opts: &OutputArgs) -> Result<(), CliError> {
    let body: Vec<u8> = match opts.format() {
        Format::Json => {
            let mut v = serde_json::to_vec_pretty(&json_document(report, manifest)).map_err(io_json)?;
            v.push(b'\n');
            v
        }
        Format::Csv => {
            let mut v = Vec::new();
            report.table.write_csv(&mut v, opts.precision).map_err(|e| CliError::Io(e.to_string()))?;
            v
        }
    };
    let manifest_json = serde_json::to_string_pretty(manifest).map_err(io_json)?;
    match &opts.output {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            if opts.format() == Format::Csv {
                let mpath = format!("{}.manifest.json", path.display());
                std::fs::write(&mpath, manifest_json + "\n").map_err(|e| CliError::Io(format!("{mpath}: {e}")))?;
            }
        }
        None => {
            std::io::stdout().write_all(&body).map_err(|e| CliError::Io(e.to_string()))?;
            if opts.format() == Format::Csv {
                eprintln!("{}", serde_json::to_string(manifest).map_err(io_json)?);
            }
        }
    }
    Ok(())
}

fn io_json(e: serde_json::Error) -> CliError {
    CliError::Io(e.to_string())
}

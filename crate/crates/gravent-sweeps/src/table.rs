use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Result, SweepError};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn render(&self, out: &mut String) {
        match self {
            Cell::Num(x) => out.push_str(&format_float(*x)),
            Cell::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            // Commas and line breaks would break the row structure.
            Cell::Text(s) => out.extend(s.chars().map(|c| match c {
                ',' => ';',
                '\n' | '\r' => ' ',
                c => c,
            })),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Num(x) => Some(*x),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Cell::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn as_text(&self) -> Option<&str> {
        match self {
            Cell::Text(s) => Some(s),
            _ => None,
        }
    }
}

/// 17 significant digits; `nan`, `inf`, `-inf` for non-finite values.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    /// Numeric column by name; non-numeric cells read as NaN.
    pub fn nums(&self, name: &str) -> Vec<f64> {
        let Some(c) = self.column(name) else { return Vec::new() };
        self.rows.iter().map(|r| r[c].as_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn bools(&self, name: &str) -> Vec<Option<bool>> {
        let Some(c) = self.column(name) else { return Vec::new() };
        self.rows.iter().map(|r| r[c].as_bool()).collect()
    }

    pub fn texts(&self, name: &str) -> Vec<String> {
        let Some(c) = self.column(name) else { return Vec::new() };
        self.rows.iter().map(|r| r[c].as_text().unwrap_or("").to_string()).collect()
    }

    /// CSV text with LF endings. `comment` becomes a leading `# ` line.
    pub fn to_csv(&self, comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = comment {
            let _ = writeln!(out, "# {}", c.replace(['\n', '\r'], " "));
        }
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                cell.render(&mut out);
            }
            out.push('\n');
        }
        out
    }
}

pub fn emit_csv(table: &Table, path: &Path, comment: Option<&str>) -> Result<()> {
    std::fs::write(path, table.to_csv(comment))
        .map_err(|source| SweepError::Io { path: path.to_path_buf(), source })
}

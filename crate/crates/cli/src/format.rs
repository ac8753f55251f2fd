//! Tables and their three renderings.
//!
//! JSON output is an array of objects with keys in column order. Big integers
//! are decimal strings, weights are `{"L0", "w1", "delta"}` objects and
//! polynomials map decimal exponents to decimal-string coefficients. CSV has a
//! header row and LF line endings.

use clap::ValueEnum;
use demazure_mult_core::{QPoly, Weight};
use num_bigint::BigUint;
use serde_json::{Map, Value};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Int(i64),
    Big(BigUint),
    Text(String),
    Bool(bool),
    Weight(Weight),
    Poly(QPoly),
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Int(n) => Value::from(*n),
            Cell::Big(n) => Value::String(n.to_string()),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Weight(w) => weight_json(w),
            Cell::Poly(p) => poly_json(p),
        }
    }

    fn to_text(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Big(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Weight(w) => w.to_string(),
            Cell::Poly(p) => p.to_string(),
        }
    }
}

pub fn weight_json(w: &Weight) -> Value {
    let mut map = Map::new();
    map.insert("L0".into(), w.lambda0.into());
    map.insert("w1".into(), w.omega1.into());
    map.insert("delta".into(), w.delta.into());
    Value::Object(map)
}

pub fn poly_json(p: &QPoly) -> Value {
    Value::Object(
        p.terms()
            .map(|(e, c)| (e.to_string(), Value::String(c.to_string())))
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[&'static str] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Text => Ok(self.render_text()),
        }
    }

    fn render_json(&self) -> Result<String, CliError> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(row)
                        .map(|(k, cell)| (k.to_string(), cell.to_json()))
                        .collect(),
                )
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&Value::Array(rows))?;
        out.push('\n');
        Ok(out)
    }

    fn render_csv(&self) -> Result<String, CliError> {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(&self.columns)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(Cell::to_text))?;
        }
        let bytes = writer.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("cells render as UTF-8"))
    }

    fn render_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cell::to_text).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(c, name)| {
                cells
                    .iter()
                    .map(|row| row[c].chars().count())
                    .chain([name.len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |values: Vec<&str>| -> String {
            let padded: Vec<String> = values
                .iter()
                .zip(&widths)
                .map(|(v, w)| format!("{v:<w$}"))
                .collect();
            format!("{}\n", padded.join("  ").trim_end())
        };
        let mut out = line(self.columns.clone());
        for row in &cells {
            out.push_str(&line(row.iter().map(String::as_str).collect()));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["weight", "mult", "poly"]);
        t.push(vec![
            Cell::Weight(Weight::new(2, -1, 3)),
            Cell::Big(BigUint::from(12345678901234567890u64) * 1000u32),
            Cell::Poly(QPoly::from_terms([(0, 1), (2, -3)])),
        ]);
        t
    }

    #[test]
    fn json_shapes() {
        let json = sample().render(Format::Json).unwrap();
        let value: Value = serde_json::from_str(&json).unwrap();
        let row = &value[0];
        assert_eq!(row["weight"]["L0"], 2);
        assert_eq!(row["weight"]["w1"], -1);
        assert_eq!(row["mult"], "12345678901234567890000");
        assert_eq!(row["poly"]["2"], "-3");
        let keys: Vec<&String> = row.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["weight", "mult", "poly"]);
    }

    #[test]
    fn json_reserializes_identically() {
        let json = sample().render(Format::Json).unwrap();
        let value: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", json);
    }

    #[test]
    fn csv_has_header_and_lf() {
        let csv = sample().render(Format::Csv).unwrap();
        assert!(!csv.contains('\r'));
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("weight,mult,poly"));
        assert!(lines
            .next()
            .unwrap()
            .starts_with("2*Lambda0 - 1*omega1 + 3*delta,"));
    }

    #[test]
    fn text_aligns_columns() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec![Cell::Int(100), Cell::Int(1)]);
        assert_eq!(t.render(Format::Text).unwrap(), "a    b\n100  1\n");
    }
}

//! Tabular output shared by the subcommands.
//!
//! CSV: header row, `,` separator, `\n` endings, reals as `{:.16e}` (17
//! significant digits), then the summary as `# key=value` lines.
//! JSON: `{"config": …, "rows": [{column: value}], "summary": {…}}`.

use std::io::Write;

use serde_json::{Map, Number, Value};

use crate::args::Format;
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    pub fn csv_field(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format_real(*v),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(v) => v.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Real(v) => Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Text(v) => Value::String(v.clone()),
        }
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(i64::try_from(v).expect("table integers fit in i64"))
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::from(v as u64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// Round-trip-exact text form of a double.
pub fn format_real(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
    summary: Vec<(String, Cell)>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
            summary: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn summarize(&mut self, key: &str, value: impl Into<Cell>) {
        self.summary.push((key.to_owned(), value.into()));
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn summary(&self) -> &[(String, Cell)] {
        &self.summary
    }

    pub fn summary_value(&self, key: &str) -> Option<&Cell> {
        self.summary.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), CliError> {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        writer.write_record(&self.columns)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(Cell::csv_field))?;
        }
        let mut out = writer.into_inner().map_err(|e| e.into_error())?;
        for (key, value) in &self.summary {
            writeln!(out, "# {key}={}", value.csv_field())?;
        }
        Ok(())
    }

    pub fn to_json(&self, config: Value) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .cloned()
                    .zip(row.iter().map(Cell::json))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let summary: Map<String, Value> = self
            .summary
            .iter()
            .map(|(k, v)| (k.clone(), v.json()))
            .collect();
        let mut top = Map::new();
        top.insert("config".into(), config);
        top.insert("rows".into(), Value::Array(rows));
        top.insert("summary".into(), Value::Object(summary));
        Value::Object(top)
    }

    pub fn render(&self, format: Format, config: Value) -> Result<Vec<u8>, CliError> {
        let mut buf = Vec::new();
        match format {
            Format::Csv => self.write_csv(&mut buf)?,
            Format::Json => {
                serde_json::to_writer_pretty(&mut buf, &self.to_json(config))?;
                buf.push(b'\n');
            }
        }
        Ok(buf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Table {
        let mut t = Table::new(["N", "x", "ok", "tag"]);
        t.push(vec![3u64.into(), 0.1.into(), true.into(), "a,b".into()]);
        t.push(vec![
            4u64.into(),
            (-2.5e-300).into(),
            false.into(),
            "c".into(),
        ]);
        t.summarize("max", 1.0 / 3.0);
        t
    }

    #[test]
    fn csv_layout() {
        let text = String::from_utf8(sample().render(Format::Csv, json!({})).unwrap()).unwrap();
        assert_eq!(
            text,
            "N,x,ok,tag\n\
             3,1.0000000000000001e-1,true,\"a,b\"\n\
             4,-2.5000000000000000e-300,false,c\n\
             # max=3.3333333333333331e-1\n"
        );
    }

    #[test]
    fn json_layout() {
        let v = sample().to_json(json!({"prime": 2}));
        assert_eq!(v["rows"][0]["x"], json!(0.1));
        assert_eq!(v["rows"][1]["ok"], json!(false));
        assert_eq!(v["summary"]["max"], json!(1.0 / 3.0));
        let keys: Vec<_> = v["rows"][0].as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["N", "x", "ok", "tag"]);
    }

    #[test]
    fn real_format_round_trips() {
        for v in [0.1, 1.0 / 3.0, 6.02214076e23, -1e-310, f64::MAX, 0.0] {
            assert_eq!(format_real(v).parse::<f64>().unwrap(), v);
        }
    }
}

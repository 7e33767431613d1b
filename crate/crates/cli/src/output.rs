use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde_json::{Map, Value};

use crate::config::Format;
use crate::error::CliError;

/// A rectangular table of JSON scalars. `Null` cells are written as empty
/// CSV fields. Floats go through the same shortest round-trip formatter in
/// both formats, so CSV and JSON carry identical digits.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    /// `# key=value` lines ahead of the CSV header; a `metadata` object in JSON.
    pub metadata: Vec<(&'static str, Value)>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), ..Self::default() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> Result<(), CliError> {
        for (key, value) in &self.metadata {
            writeln!(out, "# {key}={}", cell(value))?;
        }
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(&self.columns)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(cell))?;
        }
        writer.flush()?;
        Ok(())
    }

    fn write_json(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let object: Map<String, Value> =
                    self.columns.iter().map(|c| c.to_string()).zip(row.iter().cloned()).collect();
                Value::Object(object)
            })
            .collect();
        let document = if self.metadata.is_empty() {
            Value::Array(rows)
        } else {
            let metadata: Map<String, Value> =
                self.metadata.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            let mut doc = Map::new();
            doc.insert("metadata".into(), Value::Object(metadata));
            doc.insert("samples".into(), Value::Array(rows));
            Value::Object(doc)
        };
        serde_json::to_writer_pretty(&mut *out, &document)?;
        writeln!(out)?;
        Ok(())
    }
}

fn cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Write `table` to `path`, or to `stdout` when no path is set.
pub fn emit(table: &Table, format: Format, path: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::usage(format!("cannot create {}: {e}", path.display())))?;
            let mut writer = BufWriter::new(file);
            table.write(format, &mut writer)?;
            writer.flush()?;
            Ok(())
        }
        None => table.write(format, stdout),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Table {
        let mut t = Table::new(&["k", "x", "flag"]);
        t.push(vec![json!(-1), json!(1.0), json!(true)]);
        t.push(vec![json!(2), Value::Null, json!(false)]);
        t.push(vec![json!(3), json!(0.1 + 0.2), json!(true)]);
        t
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        sample().write(Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "k,x,flag\n-1,1.0,true\n2,,false\n3,0.30000000000000004,true\n");
    }

    #[test]
    fn json_keeps_column_order() {
        let mut buf = Vec::new();
        sample().write(Format::Json, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.find("\"k\"").unwrap() < text.find("\"x\"").unwrap());
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed[2]["x"], json!(0.30000000000000004));
        assert_eq!(parsed[1]["x"], Value::Null);
    }

    #[test]
    fn empty_table_still_has_header() {
        let mut buf = Vec::new();
        Table::new(&["a", "b"]).write(Format::Csv, &mut buf).unwrap();
        assert_eq!(buf, b"a,b\n");
    }

    #[test]
    fn metadata_lines() {
        let mut t = Table::new(&["r"]);
        t.metadata.push(("energy", json!(0.5)));
        t.push(vec![json!(1.0)]);
        let mut buf = Vec::new();
        t.write(Format::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "# energy=0.5\nr\n1.0\n");
    }
}

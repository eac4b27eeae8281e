//! CSV and JSON serialization of figure tables.

use std::io::Write;
use std::path::Path;

use super::config::OutputFormat;
use super::experiment::FigureTable;
use crate::divergences::Quantifier;
use crate::error::{Error, Result};

const COLUMNS: [&str; 7] = [
    "value",
    "lhs",
    "rhs_env",
    "rhs_corr_rho",
    "rhs_corr_sigma",
    "rhs_total",
    "slack",
];

fn number(x: f64) -> String {
    format!("{x:.16e}")
}

/// `s` followed by seven columns per quantifier.
pub fn csv_header(quantifiers: &[Quantifier]) -> Vec<String> {
    let mut header = vec!["s".to_string()];
    for q in quantifiers {
        header.extend(COLUMNS.iter().map(|c| format!("{q}_{c}")));
    }
    header
}

pub fn write_csv<W: Write>(table: &FigureTable, out: W) -> Result<()> {
    let ser = |e: csv::Error| Error::Serialization(e.to_string());
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(csv_header(&table.config.quantifiers)).map_err(ser)?;
    for row in &table.rows {
        let mut record = vec![number(row.s)];
        for e in &row.entries {
            record.extend(
                [e.value, e.lhs, e.rhs_env, e.rhs_corr_rho, e.rhs_corr_sigma, e.rhs_total, e.slack].map(number),
            );
        }
        writer.write_record(&record).map_err(ser)?;
    }
    writer.flush().map_err(|e| Error::Serialization(e.to_string()))
}

pub fn to_csv_string(table: &FigureTable) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(table, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Serialization(e.to_string()))
}

pub fn to_json_string(table: &FigureTable) -> Result<String> {
    serde_json::to_string_pretty(table).map_err(|e| Error::Serialization(e.to_string()))
}

pub fn from_json_str(text: &str) -> Result<FigureTable> {
    serde_json::from_str(text).map_err(|e| Error::Serialization(e.to_string()))
}

/// Writes the table to `path`, creating parent directories as needed.
pub fn emit(table: &FigureTable, format: OutputFormat, path: &Path) -> Result<()> {
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(io)?;
    }
    let text = match format {
        OutputFormat::Csv => to_csv_string(table)?,
        OutputFormat::Json => to_json_string(table)? + "\n",
    };
    std::fs::write(path, text).map_err(io)
}

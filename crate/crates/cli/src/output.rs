//! CSV tables and their manifests.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

use crate::scenario::Scenario;

pub const TOOL_VERSION: &str = concat!("spread ", env!("CARGO_PKG_VERSION"));

/// Column-major numeric table; the first column is the axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub data: Vec<Vec<f64>>,
}

impl Table {
    pub fn new() -> Self {
        Table {
            columns: Vec::new(),
            data: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, values: Vec<f64>) {
        if let Some(first) = self.data.first() {
            assert_eq!(first.len(), values.len(), "column length mismatch");
        }
        self.columns.push(name.into());
        self.data.push(values);
    }

    pub fn rows(&self) -> usize {
        self.data.first().map_or(0, Vec::len)
    }
}

pub fn render_csv(scenario: &Scenario, table: &Table) -> String {
    let mut out = String::new();
    writeln!(out, "# {TOOL_VERSION}").unwrap();
    writeln!(out, "# kind: {}", scenario.kind()).unwrap();
    if let Ok(grid) = scenario.grid() {
        writeln!(
            out,
            "# momentum grid: {} Simpson intervals on [0, pi]",
            grid.intervals()
        )
        .unwrap();
    }
    writeln!(out, "# scenario:").unwrap();
    for line in scenario.to_toml().lines() {
        if line.is_empty() {
            writeln!(out, "#").unwrap();
        } else {
            writeln!(out, "#   {line}").unwrap();
        }
    }
    writeln!(out, "{}", table.columns.join(",")).unwrap();
    for r in 0..table.rows() {
        let row: Vec<String> = table
            .data
            .iter()
            .map(|c| format!("{:.16e}", c[r]))
            .collect();
        writeln!(out, "{}", row.join(",")).unwrap();
    }
    out
}

pub fn render_manifest(scenario: &Scenario, table: &Table, csv_name: &str) -> Result<String> {
    let mut doc = toml::Table::new();
    doc.insert("tool".into(), TOOL_VERSION.into());
    doc.insert("csv".into(), csv_name.into());
    doc.insert("rows".into(), (table.rows() as i64).into());
    doc.insert(
        "columns".into(),
        toml::Value::Array(table.columns.iter().map(|c| c.as_str().into()).collect()),
    );
    doc.insert("scenario".into(), toml::Value::try_from(scenario)?);
    Ok(toml::to_string(&doc)?)
}

/// Manifest path next to a CSV: `dir/stem.csv` -> `dir/stem.manifest.toml`.
pub fn manifest_path(csv: &Path) -> PathBuf {
    let stem = csv.file_stem().and_then(|s| s.to_str()).unwrap_or("output");
    csv.with_file_name(format!("{stem}.manifest.toml"))
}

/// Write every CSV and manifest after all tables have been computed.
pub fn write_all(outputs: &[(PathBuf, &Scenario, Table)]) -> Result<Vec<PathBuf>> {
    let mut rendered = Vec::new();
    for (path, scenario, table) in outputs {
        let name = path
            .file_name()
            .and_then(|s| s.to_str())
            .unwrap_or_default();
        rendered.push((path.clone(), render_csv(scenario, table)));
        rendered.push((manifest_path(path), render_manifest(scenario, table, name)?));
    }
    let mut written = Vec::new();
    for (path, text) in rendered {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        written.push(path);
    }
    Ok(written)
}

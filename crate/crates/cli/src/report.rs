//! Report records and their JSON, CSV and plain-text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;

use clap::ValueEnum;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::CliResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportKind {
    FTable,
    Distribution,
    Expectation,
    Constants,
    Lambert,
    Theorem1,
    Convergence,
    Bijection,
    OeisCheck,
}

impl ReportKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::FTable => "f-table",
            Self::Distribution => "distribution",
            Self::Expectation => "expectation",
            Self::Constants => "constants",
            Self::Lambert => "lambert",
            Self::Theorem1 => "theorem1",
            Self::Convergence => "convergence",
            Self::Bijection => "bijection",
            Self::OeisCheck => "oeis-check",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    /// Exact integer, rational or truncated decimal; always a string in JSON.
    Exact(String),
    Real(String),
    Text(String),
    Flag(bool),
    Empty,
}

impl Cell {
    pub fn exact(v: impl ToString) -> Self {
        Self::Exact(v.to_string())
    }

    pub fn text(v: impl ToString) -> Self {
        Self::Text(v.to_string())
    }

    fn plain(&self) -> String {
        match self {
            Self::Exact(s) | Self::Real(s) | Self::Text(s) => s.clone(),
            Self::Flag(b) => b.to_string(),
            Self::Empty => String::new(),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Self::Exact(v) | Self::Real(v) | Self::Text(v) => s.serialize_str(v),
            Self::Flag(b) => s.serialize_bool(*b),
            Self::Empty => s.serialize_none(),
        }
    }
}

/// Labelled cells, serialized as a JSON object in insertion order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Row(pub Vec<(String, Cell)>);

impl Row {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, label: &str, cell: Cell) -> Self {
        self.0.push((label.to_string(), cell));
        self
    }

    pub fn get(&self, label: &str) -> Option<&Cell> {
        self.0.iter().find(|(l, _)| l == label).map(|(_, c)| c)
    }
}

impl Serialize for Row {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (label, cell) in &self.0 {
            map.serialize_entry(label, cell)?;
        }
        map.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub kind: ReportKind,
    pub parameters: BTreeMap<String, String>,
    pub rows: Vec<Row>,
    pub status: Status,
    pub notes: Vec<String>,
}

impl ReportRecord {
    pub fn new(kind: ReportKind) -> Self {
        Self {
            kind,
            parameters: BTreeMap::new(),
            rows: Vec::new(),
            status: Status::Info,
            notes: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(&mut self, text: impl Into<String>) {
        let text = text.into();
        log::warn!("{text}");
        self.notes.push(text);
    }

    fn labels(&self) -> Vec<String> {
        self.rows
            .first()
            .map(|r| r.0.iter().map(|(l, _)| l.clone()).collect())
            .unwrap_or_default()
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> CliResult<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(self.labels())?;
                for row in &self.rows {
                    w.write_record(row.0.iter().map(|(_, c)| c.plain()))?;
                }
                w.flush()?;
            }
            Format::Text => out.write_all(self.to_text().as_bytes())?,
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{}", self.kind.name());
        for (k, v) in &self.parameters {
            let _ = write!(s, "  {k}={v}");
        }
        s.push('\n');
        let labels = self.labels();
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.0.iter().map(|(_, c)| c.plain()).collect())
            .collect();
        let mut widths: Vec<usize> = labels.iter().map(|l| l.len()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let line = |items: &[String]| {
            let padded: Vec<String> = items
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        if !labels.is_empty() {
            s.push_str(&line(&labels));
            s.push('\n');
        }
        for row in &cells {
            s.push_str(&line(row));
            s.push('\n');
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        let _ = writeln!(
            s,
            "status: {}",
            match self.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "ok",
            }
        );
        s
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReportRecord {
        let mut r = ReportRecord::new(ReportKind::FTable);
        r.param("n", 2);
        r.rows.push(
            Row::new()
                .with("j", Cell::exact(0))
                .with("big", Cell::exact("123456789012345678901234567890"))
                .with("ok", Cell::Flag(true)),
        );
        r.rows.push(
            Row::new()
                .with("j", Cell::exact(1))
                .with("big", Cell::text("a,b"))
                .with("ok", Cell::Empty),
        );
        r
    }

    #[test]
    fn json_keeps_big_integers_and_order() {
        let mut buf = Vec::new();
        sample().render(Format::Json, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["kind"], "f-table");
        assert_eq!(v["rows"][0]["big"], "123456789012345678901234567890");
        assert_eq!(v["rows"][0]["ok"], true);
        assert!(v["rows"][1]["ok"].is_null());
        assert!(text.find("\"j\"").unwrap() < text.find("\"big\"").unwrap());
    }

    #[test]
    fn csv_quotes_fields() {
        let mut buf = Vec::new();
        sample().render(Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "j,big,ok\n0,123456789012345678901234567890,true\n1,\"a,b\",\n"
        );
    }

    #[test]
    fn text_aligns_columns() {
        let text = sample().to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "f-table  n=2");
        assert!(lines[1].starts_with("j  big"));
        assert_eq!(lines.last(), Some(&"status: ok"));
    }
}

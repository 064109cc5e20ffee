//! Rendering of reports as JSON, CSV or aligned text.

use clap::ValueEnum;
use serde_json::Value;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// A command result: a JSON document plus the same data as a flat table.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Set by verification commands when a check failed.
    pub failed: bool,
}

impl Report {
    pub fn new(json: Value, header: Vec<String>, rows: Vec<Vec<String>>) -> Self {
        Report { json, header, rows, failed: false }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.json),
            Format::Csv => {
                let mut out = String::new();
                for line in std::iter::once(&self.header).chain(&self.rows) {
                    let cells: Vec<String> = line.iter().map(|c| csv_cell(c)).collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Text => {
                let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
                for row in &self.rows {
                    for (w, c) in widths.iter_mut().zip(row) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let mut out = String::new();
                for line in std::iter::once(&self.header).chain(&self.rows) {
                    let cells: Vec<String> = line.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
                    out.push_str(cells.join("  ").trim_end());
                    out.push('\n');
                }
                out
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// Header `mu1..mun` followed by `extra`.
pub fn mu_header(n: usize, extra: &[&str]) -> Vec<String> {
    (1..=n).map(|i| format!("mu{i}")).chain(extra.iter().map(|s| s.to_string())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_all_formats() {
        let r = Report::new(
            json!({"value": "1/6"}),
            mu_header(2, &["value"]),
            vec![vec!["1".into(), "2".into(), "1/6".into()]],
        );
        assert_eq!(r.render(Format::Json), "{\"value\":\"1/6\"}\n");
        assert_eq!(r.render(Format::Csv), "mu1,mu2,value\n1,2,1/6\n");
        assert_eq!(r.render(Format::Text), "mu1  mu2  value\n1    2    1/6\n");
    }

    #[test]
    fn quotes_csv_cells() {
        assert_eq!(csv_cell("a,b"), "\"a,b\"");
        assert_eq!(csv_cell("x\"y"), "\"x\"\"y\"");
    }
}

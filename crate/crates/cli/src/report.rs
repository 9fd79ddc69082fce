//! Tabular command output, rendered as CSV with `#` comment lines or as a
//! single JSON document carrying the same data.

use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
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

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => sig12(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => sig12(*v)
                .parse::<f64>()
                .ok()
                .and_then(|x| serde_json::Number::from_f64(x).map(Value::Number))
                .unwrap_or(Value::Null),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
        }
    }
}

/// Decimal rendering with at most 12 significant digits and no trailing zeros.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-6..=15).contains(&magnitude) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - magnitude).max(0) as usize;
    let text = format!("{x:.decimals$}");
    let text = if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        text
    };
    if text == "-0" {
        "0".into()
    } else {
        text
    }
}

#[derive(Debug, Default)]
pub struct Report {
    config: Vec<(String, Cell)>,
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
    summary: Vec<(String, Cell)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut report = Report::default();
        report.config("command", command);
        report
    }

    pub fn config(&mut self, key: &str, value: impl Into<Cell>) -> &mut Self {
        self.config.push((key.into(), value.into()));
        self
    }

    pub fn columns(&mut self, names: &[&str]) -> &mut Self {
        self.columns = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn row(&mut self, cells: Vec<Cell>) -> &mut Self {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
        self
    }

    pub fn summary(&mut self, key: &str, value: impl Into<Cell>) -> &mut Self {
        self.summary.push((key.into(), value.into()));
        self
    }

    pub fn to_csv(&self) -> String {
        let pairs = |items: &[(String, Cell)]| {
            items
                .iter()
                .map(|(k, v)| format!("{k}={}", v.to_csv()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = format!("# {}\n", pairs(&self.config));
        if !self.columns.is_empty() {
            out.push_str(&self.columns.join(","));
            out.push('\n');
            for row in &self.rows {
                let cells: Vec<String> = row.iter().map(Cell::to_csv).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        if !self.summary.is_empty() {
            out.push_str(&format!("# summary {}\n", pairs(&self.summary)));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let object = |items: &[(String, Cell)]| {
            Value::Object(items.iter().map(|(k, v)| (k.clone(), v.to_json())).collect())
        };
        let mut doc = Map::new();
        doc.insert("config".into(), object(&self.config));
        if !self.columns.is_empty() {
            let rows = self
                .rows
                .iter()
                .map(|row| {
                    Value::Object(
                        self.columns
                            .iter()
                            .zip(row)
                            .map(|(c, v)| (c.clone(), v.to_json()))
                            .collect(),
                    )
                })
                .collect();
            doc.insert("rows".into(), Value::Array(rows));
        }
        if !self.summary.is_empty() {
            doc.insert("summary".into(), object(&self.summary));
        }
        let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("json value");
        text.push('\n');
        text
    }
}

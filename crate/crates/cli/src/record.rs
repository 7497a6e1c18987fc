use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossCheck {
    /// Every method that ran produced the same value.
    Agree,
    Disagree,
    /// Only one method ran.
    Single,
    Pass,
    Fail,
}

impl CrossCheck {
    pub fn from_agreement(values: &[MethodValue]) -> Self {
        match values {
            [] | [_] => CrossCheck::Single,
            [first, rest @ ..] => {
                if rest.iter().all(|v| v.value == first.value) {
                    CrossCheck::Agree
                } else {
                    CrossCheck::Disagree
                }
            }
        }
    }

    pub fn is_failure(self) -> bool {
        matches!(self, CrossCheck::Disagree | CrossCheck::Fail)
    }

    fn label(self) -> &'static str {
        match self {
            CrossCheck::Agree => "agree",
            CrossCheck::Disagree => "disagree",
            CrossCheck::Single => "single",
            CrossCheck::Pass => "pass",
            CrossCheck::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodValue {
    pub method: String,
    pub value: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Every number is a decimal string so arbitrary precision survives JSON readers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Scalar(String),
    List(Vec<String>),
    Table(Vec<Vec<String>>),
    Checks(Vec<Check>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub operation: String,
    pub params: BTreeMap<String, String>,
    pub result: Payload,
    pub methods: Vec<MethodValue>,
    pub cross_check: CrossCheck,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = self.to_json();
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn params_line(&self) -> String {
        let mut line = self.operation.clone();
        for (k, v) in &self.params {
            let _ = write!(line, " {k}={v}");
        }
        line
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.params_line());
        match &self.result {
            Payload::Scalar(v) => {
                for mv in &self.methods {
                    if let Payload::Scalar(x) = &mv.value {
                        let _ = writeln!(out, "  {:<12}{}", mv.method, x);
                    }
                }
                let _ = writeln!(out, "result: {v}");
            }
            Payload::List(items) => {
                for mv in &self.methods {
                    let _ = writeln!(out, "  method {}", mv.method);
                }
                let _ = writeln!(out, "{}", items.join(" "));
            }
            Payload::Table(rows) => {
                let widths = column_widths(rows);
                for row in rows {
                    let cells: Vec<String> = row
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect();
                    let _ = writeln!(out, "{}", cells.join(" "));
                }
            }
            Payload::Checks(checks) => {
                for c in checks {
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{tag}  {}  ({})", c.name, c.detail);
                }
                let passed = checks.iter().filter(|c| c.passed).count();
                let _ = writeln!(out, "{passed}/{} checks passed", checks.len());
            }
        }
        let _ = writeln!(out, "cross-check: {}", self.cross_check.label());
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Payload::Scalar(v) => {
                out.push_str("method,value\n");
                for mv in &self.methods {
                    if let Payload::Scalar(x) = &mv.value {
                        let _ = writeln!(out, "{},{}", mv.method, x);
                    }
                }
                let _ = writeln!(out, "result,{v}");
            }
            Payload::List(items) => {
                out.push_str("k,coefficient\n");
                for (k, c) in items.iter().enumerate() {
                    let _ = writeln!(out, "{k},{c}");
                }
            }
            Payload::Table(rows) => {
                for row in rows {
                    let _ = writeln!(out, "{}", row.join(","));
                }
            }
            Payload::Checks(checks) => {
                out.push_str("check,status,detail\n");
                for c in checks {
                    let tag = if c.passed { "pass" } else { "fail" };
                    let _ = writeln!(out, "\"{}\",{tag},\"{}\"", c.name, c.detail);
                }
            }
        }
        out
    }
}

fn column_widths(rows: &[Vec<String>]) -> Vec<usize> {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    (0..cols)
        .map(|i| {
            rows.iter()
                .filter_map(|r| r.get(i))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect()
}

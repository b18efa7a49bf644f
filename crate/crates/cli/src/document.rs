//! The space document format.
//!
//! ```text
//! # comments start with '#'
//! tool: ultragraph 0.1.0
//! points: a b c
//! matrix:
//! 0 2 2
//! 2 0 1
//! 2 1 0
//! ```
//!
//! Header lines are `key: value` pairs; `points` is required and lists the
//! labels separated by whitespace. After `matrix:` come exactly one row per
//! point. Entries are `p/q`, integers or decimals, all read exactly.
//! Emitted documents write entries in lowest terms as `p/q` (or `p`).

use std::fmt::Write as _;

use ultragraph_core::{FiniteSpace, Rational};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDocument {
    /// Header lines other than `points`, in order.
    pub meta: Vec<(String, String)>,
    pub points: Vec<String>,
    pub matrix: Vec<Vec<Rational>>,
}

impl SpaceDocument {
    pub fn from_space(space: &FiniteSpace, meta: Vec<(String, String)>) -> Self {
        SpaceDocument { meta, points: space.labels().to_vec(), matrix: space.rows() }
    }

    pub fn to_space(&self) -> Result<FiniteSpace, CliError> {
        FiniteSpace::new(self.points.clone(), self.matrix.clone()).map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn meta_value(&self, key: &str) -> Option<&str> {
        self.meta.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut meta = Vec::new();
        let mut points: Option<Vec<String>> = None;
        let mut matrix: Vec<Vec<Rational>> = Vec::new();
        let mut in_matrix = false;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if in_matrix {
                let n = points.as_ref().map_or(0, Vec::len);
                if matrix.len() == n {
                    return Err(CliError::parse(line_no, format!("extra matrix row (expected {n})")));
                }
                let row = line
                    .split_whitespace()
                    .enumerate()
                    .map(|(col, tok)| {
                        tok.parse::<Rational>().map_err(|_| {
                            CliError::parse(line_no, format!("entry {} is not a rational: {tok:?}", col + 1))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if row.len() != n {
                    return Err(CliError::parse(line_no, format!("row has {} entries, expected {n}", row.len())));
                }
                matrix.push(row);
                continue;
            }
            let Some((key, value)) = line.split_once(':') else {
                return Err(CliError::parse(line_no, format!("expected `key: value`, got {line:?}")));
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "points" => {
                    if points.is_some() {
                        return Err(CliError::parse(line_no, "duplicate `points` line"));
                    }
                    let names: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                    if names.is_empty() {
                        return Err(CliError::parse(line_no, "`points` lists no labels"));
                    }
                    points = Some(names);
                }
                "matrix" => {
                    if !value.is_empty() {
                        return Err(CliError::parse(line_no, "`matrix:` must be alone on its line"));
                    }
                    if points.is_none() {
                        return Err(CliError::parse(line_no, "`points` must come before `matrix`"));
                    }
                    in_matrix = true;
                }
                _ if key.is_empty() || key.contains(char::is_whitespace) => {
                    return Err(CliError::parse(line_no, format!("bad header key {key:?}")));
                }
                _ => meta.push((key.to_string(), value.to_string())),
            }
        }

        let points = points.ok_or_else(|| CliError::Input("document has no `points` line".into()))?;
        if !in_matrix {
            return Err(CliError::Input("document has no `matrix:` section".into()));
        }
        if matrix.len() != points.len() {
            return Err(CliError::Input(format!("matrix has {} rows, expected {}", matrix.len(), points.len())));
        }
        Ok(SpaceDocument { meta, points, matrix })
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            let _ = writeln!(out, "{k}: {v}");
        }
        let _ = writeln!(out, "points: {}", self.points.join(" "));
        out.push_str("matrix:\n");
        let cells: Vec<Vec<String>> =
            self.matrix.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

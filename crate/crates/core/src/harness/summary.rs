use std::path::Path;

use crate::error::{Error, Result};
use crate::harness::experiment::CELLS_HEADER;
use crate::io::{fmt_num, parse_num};

pub const SUMMARY_HEADER: &str = "scenario,p,m,theta,sigma,relative_bias,design_effect,mean_omega";

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub scenario: String,
    pub p: f64,
    pub m: usize,
    pub theta: f64,
    pub sigma: f64,
    pub relative_bias: f64,
    pub design_effect: f64,
    pub mean_omega: f64,
}

/// Rows sorted by scenario, then by `p`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SummaryTable {
    pub rows: Vec<SummaryRow>,
}

impl SummaryTable {
    pub fn to_csv(&self) -> String {
        let mut s = format!("{SUMMARY_HEADER}\n");
        for r in &self.rows {
            s += &format!(
                "{},{},{},{},{},{},{},{}\n",
                r.scenario,
                fmt_num(r.p),
                r.m,
                fmt_num(r.theta),
                fmt_num(r.sigma),
                fmt_num(r.relative_bias),
                fmt_num(r.design_effect),
                fmt_num(r.mean_omega)
            );
        }
        s
    }

    pub fn get(&self, scenario: &str, p: f64) -> Option<&SummaryRow> {
        self.rows
            .iter()
            .find(|r| r.scenario == scenario && r.p == p)
    }
}

/// Parses one `<scenario>_cells.csv` file.
pub fn parse_cells_csv(text: &str, source: &str) -> Result<Vec<SummaryRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == CELLS_HEADER => {}
        Some((_, h)) => {
            return Err(Error::parse(
                source,
                1,
                format!("unexpected header {h:?}, expected {CELLS_HEADER:?}"),
            ))
        }
        None => return Err(Error::parse(source, 1, "missing header")),
    }
    let width = CELLS_HEADER.split(',').count();
    let mut rows = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').map(str::trim).collect();
        if f.len() != width {
            return Err(Error::parse(
                source,
                line_no,
                format!("expected {width} fields, found {}", f.len()),
            ));
        }
        let num = |j: usize| {
            parse_num(f[j]).ok_or_else(|| {
                Error::parse(
                    source,
                    line_no,
                    format!("field {} is not a number: {:?}", j + 1, f[j]),
                )
            })
        };
        let m = f[2].parse().map_err(|_| {
            Error::parse(
                source,
                line_no,
                format!("field 3 is not a count: {:?}", f[2]),
            )
        })?;
        // Columns: scenario,p,m,true_prevalence,theta,sigma,delta,relative_bias,design_effect,mean_omega
        rows.push(SummaryRow {
            scenario: f[0].to_string(),
            p: num(1)?,
            m,
            theta: num(4)?,
            sigma: num(5)?,
            relative_bias: num(7)?,
            design_effect: num(8)?,
            mean_omega: num(9)?,
        });
    }
    Ok(rows)
}

/// Collects every `*_cells.csv` in `dir` into one table keyed by
/// (scenario, p).
pub fn summarize(dir: impl AsRef<Path>) -> Result<SummaryTable> {
    let dir = dir.as_ref();
    let mut paths = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        let is_cells = path
            .file_name()
            .and_then(|n| n.to_str())
            .is_some_and(|n| n.ends_with("_cells.csv"));
        if is_cells && path.is_file() {
            paths.push(path);
        }
    }
    paths.sort();
    let mut rows = Vec::new();
    for path in paths {
        let text = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        rows.extend(parse_cells_csv(&text, &path.display().to_string())?);
    }
    rows.sort_by(|a, b| a.scenario.cmp(&b.scenario).then(a.p.total_cmp(&b.p)));
    Ok(SummaryTable { rows })
}

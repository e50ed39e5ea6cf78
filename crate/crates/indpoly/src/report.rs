//! Pass/fail tables produced by the verification drivers.

use std::fmt;

#[derive(Clone, Debug, serde::Serialize)]
pub struct ClaimRow {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct Report {
    pub rows: Vec<ClaimRow>,
}

impl Report {
    pub fn new() -> Self {
        Report { rows: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.rows.push(ClaimRow { name: name.into(), pass, detail: detail.into() });
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn merge(&mut self, other: Report) {
        self.rows.extend(other.rows);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let mark = if row.pass { "PASS" } else { "FAIL" };
            if row.detail.is_empty() {
                writeln!(f, "[{mark}] {}", row.name)?;
            } else {
                writeln!(f, "[{mark}] {}: {}", row.name, row.detail)?;
            }
        }
        let failed = self.rows.iter().filter(|r| !r.pass).count();
        writeln!(f, "{} checks, {} failed", self.rows.len(), failed)
    }
}

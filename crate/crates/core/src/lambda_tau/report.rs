use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked identity. Both sides are recorded only for failures.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AxiomRecord {
    pub axiom: String,
    pub status: Status,
    pub witness: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub lhs: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub rhs: String,
}

impl AxiomRecord {
    pub fn check(axiom: &str, witness: String, ok: bool, sides: impl FnOnce() -> (String, String)) -> Self {
        let (lhs, rhs) = if ok { (String::new(), String::new()) } else { sides() };
        AxiomRecord {
            axiom: axiom.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
            lhs,
            rhs,
        }
    }
}

/// Outcome of an axiom suite; records are kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub records: Vec<AxiomRecord>,
}

impl AxiomReport {
    pub fn from_records(mut records: Vec<AxiomRecord>) -> Self {
        records.sort();
        AxiomReport { records }
    }

    pub fn merge(mut self, other: AxiomReport) -> Self {
        self.records.extend(other.records);
        self.records.sort();
        self
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn is_clean(&self) -> bool {
        self.failures().next().is_none()
    }

    /// `(axiom, checked, failed)` per axiom name, sorted.
    pub fn summary(&self) -> Vec<(String, usize, usize)> {
        let mut out: Vec<(String, usize, usize)> = Vec::new();
        for r in &self.records {
            match out.last_mut() {
                Some(last) if last.0 == r.axiom => {
                    last.1 += 1;
                    last.2 += (r.status == Status::Fail) as usize;
                }
                _ => out.push((r.axiom.clone(), 1, (r.status == Status::Fail) as usize)),
            }
        }
        out
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.summary();
        let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(5).max(5);
        writeln!(f, "{:<width$}  {:>7}  {:>6}", "axiom", "checked", "failed")?;
        for (axiom, checked, failed) in &rows {
            writeln!(f, "{axiom:<width$}  {checked:>7}  {failed:>6}")?;
        }
        for r in self.failures() {
            writeln!(f, "FAIL {} at {}", r.axiom, r.witness)?;
            writeln!(f, "  lhs: {}", r.lhs)?;
            writeln!(f, "  rhs: {}", r.rhs)?;
        }
        Ok(())
    }
}

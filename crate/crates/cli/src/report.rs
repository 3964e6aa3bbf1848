//! Serialized reports: the JSON document and CSV rows.

use std::collections::BTreeMap;

use mhahn_core::scalar::parse_rational;
use mhahn_core::{IdentityReport, Scalar};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Report {
    pub version: String,
    pub command: String,
    pub reports: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tables: BTreeMap<String, Vec<Vec<String>>>,
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            version: SCHEMA_VERSION.to_string(),
            command: command.into(),
            reports: Vec::new(),
            summary: None,
            value: None,
            tables: BTreeMap::new(),
            elapsed_ms: None,
        }
    }

    pub fn pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass) && self.summary.as_ref().is_none_or(|s| s.failed == 0)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// `name,grid,max_residual,pass` rows; commas in names become semicolons.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,grid,max_residual,pass\n");
        for r in &self.reports {
            out += &format!("{},{},{},{}\n", r.name.replace(',', ";"), r.grid, r.max_residual, r.pass);
        }
        out
    }
}

/// Pass counts over the jobs of a sweep.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Summary {
    pub jobs: usize,
    pub passed: usize,
    pub failed: usize,
    pub worst_residual: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Entry {
    pub name: String,
    pub grid: usize,
    pub max_residual: String,
    pub pass: bool,
    pub witness: Option<WitnessEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct WitnessEntry {
    pub indices: Vec<i64>,
    pub residual: String,
    /// Parameters of the failing draw.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<String>,
}

impl From<IdentityReport> for Entry {
    fn from(r: IdentityReport) -> Self {
        Entry {
            name: r.name,
            grid: r.grid,
            max_residual: r.max_residual,
            pass: r.pass,
            witness: r.witness.map(|w| WitnessEntry { indices: w.indices, residual: w.residual, params: None }),
            note: r.note,
        }
    }
}

impl Entry {
    /// A check that could not be carried out.
    pub fn error(name: impl Into<String>, why: impl ToString) -> Self {
        Entry {
            name: name.into(),
            grid: 0,
            max_residual: "error".to_string(),
            pass: false,
            witness: Some(WitnessEntry { indices: Vec::new(), residual: why.to_string(), params: None }),
            note: None,
        }
    }

    /// Prepends job indices to the witness and records the job parameters.
    pub fn within(mut self, prefix: &[i64], params: Option<&str>) -> Self {
        if let Some(w) = &mut self.witness {
            w.indices.splice(0..0, prefix.iter().copied());
            if w.params.is_none() {
                w.params = params.map(str::to_string);
            }
        }
        self
    }

    /// Folds `other` (a later run of the same identity) into `self`.
    pub fn absorb(&mut self, other: Entry) {
        self.grid += other.grid;
        if residual_key(&other.max_residual) > residual_key(&self.max_residual) {
            self.max_residual = other.max_residual;
        }
        self.pass &= other.pass;
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        if self.note.is_none() {
            self.note = other.note;
        }
    }
}

/// Orders residual strings: exact rationals by absolute value, floats by value,
/// anything else (errors, NaN) above all numbers.
pub fn residual_key(s: &str) -> f64 {
    if let Ok(r) = parse_rational(s) {
        return Scalar::residual_size(&r);
    }
    match s.parse::<f64>() {
        Ok(v) if !v.is_nan() => v.abs(),
        _ => f64::INFINITY,
    }
}

/// Merges entries by name, keeping first-seen order.
#[derive(Default)]
pub struct Merger {
    entries: Vec<Entry>,
}

impl Merger {
    pub fn add(&mut self, entry: Entry) {
        match self.entries.iter_mut().find(|e| e.name == entry.name) {
            Some(e) => e.absorb(entry),
            None => self.entries.push(entry),
        }
    }

    pub fn finish(self) -> Vec<Entry> {
        self.entries
    }
}

/// CSV rows `m,n,value` of a square table.
pub fn grid_csv(values: &[Vec<String>]) -> String {
    let mut out = String::from("m,n,value\n");
    for (m, row) in values.iter().enumerate() {
        for (n, v) in row.iter().enumerate() {
            out += &format!("{m},{n},{v}\n");
        }
    }
    out
}

/// CSV rows `name,m,n,value` for several named tables.
pub fn named_csv(tables: &BTreeMap<String, Vec<Vec<String>>>) -> String {
    let mut out = String::from("name,m,n,value\n");
    for (name, values) in tables {
        for (m, row) in values.iter().enumerate() {
            for (n, v) in row.iter().enumerate() {
                out += &format!("{name},{m},{n},{v}\n");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(name: &str, res: &str, pass: bool) -> Entry {
        Entry {
            name: name.into(),
            grid: 3,
            max_residual: res.into(),
            pass,
            witness: (!pass).then(|| WitnessEntry { indices: vec![1], residual: res.into(), params: None }),
            note: None,
        }
    }

    #[test]
    fn absorb_keeps_worst_and_first_witness() {
        let mut m = Merger::default();
        m.add(entry("a", "0", true));
        m.add(entry("b", "1/3", false).within(&[2, 5], Some("N=2")));
        m.add(entry("a", "-1/2", false).within(&[4, 0], None));
        m.add(entry("b", "2", false));
        let out = m.finish();
        assert_eq!(out.len(), 2);
        assert_eq!((out[0].grid, out[0].max_residual.as_str(), out[0].pass), (6, "-1/2", false));
        assert_eq!(out[0].witness.as_ref().unwrap().indices, vec![4, 0, 1]);
        assert_eq!(out[1].max_residual, "2");
        assert_eq!(out[1].witness.as_ref().unwrap().params.as_deref(), Some("N=2"));
    }

    #[test]
    fn residual_ordering() {
        assert!(residual_key("1/3") < residual_key("1/2"));
        assert!(residual_key("1.000e-12") < residual_key("3.000e-10"));
        assert_eq!(residual_key("error"), f64::INFINITY);
        assert_eq!(residual_key("0"), 0.0);
    }

    #[test]
    fn json_round_trips() {
        let mut r = Report::new("verify all --N 2");
        r.reports.push(entry("x, y", "0", true));
        r.reports.push(entry("z", "1/7", false).within(&[1], Some("N=1 a=2")));
        let text = r.to_json();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
        assert!(r.to_csv().starts_with("name,grid,max_residual,pass\nx; y,3,0,true\n"));
    }
}

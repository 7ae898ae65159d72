//! Check records, the line-delimited structured report, and the stdout table.
//!
//! One record per executed check, sorted by (suite, case) so concurrent or
//! reordered execution can never change the artifact; the `ms` field is the
//! only thing allowed to differ between reruns.

use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CheckRecord {
    pub suite: String,
    pub case: String,
    pub inputs: String,
    pub contract: String,
    /// Exact residual ("0/1") for identity checks, or "achieved ≤ allowed"
    /// for bound checks.
    pub residual_or_bound: String,
    pub pass: bool,
    pub ms: u128,
}

pub fn sort_records(records: &mut [CheckRecord]) {
    records.sort_by(|a, b| (a.suite.as_str(), a.case.as_str()).cmp(&(b.suite.as_str(), b.case.as_str())));
}

pub fn write_jsonl(path: &Path, records: &[CheckRecord]) -> std::io::Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn read_jsonl(path: &Path) -> Result<Vec<CheckRecord>, String> {
    let file = std::fs::File::open(path).map_err(|e| e.to_string())?;
    let mut records = Vec::new();
    for (i, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| e.to_string())?;
        if line.trim().is_empty() {
            continue;
        }
        let r: CheckRecord =
            serde_json::from_str(&line).map_err(|e| format!("line {}: {e}", i + 1))?;
        records.push(r);
    }
    Ok(records)
}

pub fn render_table(records: &[CheckRecord]) -> String {
    let mut out = String::new();
    let case_w = records
        .iter()
        .map(|r| r.suite.len() + r.case.len() + 1)
        .chain([10])
        .max()
        .unwrap();
    let contract_w = records
        .iter()
        .map(|r| r.contract.len())
        .chain([8])
        .max()
        .unwrap()
        .min(58);
    for r in records {
        let id = format!("{}/{}", r.suite, r.case);
        let verdict = if r.pass { "pass" } else { "FAIL" };
        let mut contract = r.contract.clone();
        if contract.len() > contract_w {
            contract.truncate(contract_w - 1);
            contract.push('…');
        }
        out.push_str(&format!(
            "{id:<case_w$}  {contract:<contract_w$}  {:<24}  {verdict}\n",
            r.residual_or_bound
        ));
    }
    let passed = records.iter().filter(|r| r.pass).count();
    out.push_str(&format!(
        "{} checks, {passed} passed, {} failed\n",
        records.len(),
        records.len() - passed
    ));
    out
}

//! JSON-lines store of verification reports.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, ErrorKind, Write};
use std::path::Path;

use anyhow::{Context, Result};
use gtrs::verify::{Check, CodeReport};
use gtrs::Field;

#[derive(Clone, Debug, Default)]
pub struct Filter {
    pub field: Option<Field>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub verdicts: Vec<(Check, bool)>,
}

impl Filter {
    pub fn matches(&self, report: &CodeReport) -> bool {
        if let Some(f) = &self.field {
            if Field::parse(&report.spec.field).ok().as_ref() != Some(f) {
                return false;
            }
        }
        self.n.is_none_or(|n| report.spec.n == n)
            && self.k.is_none_or(|k| report.spec.k == k)
            && self
                .verdicts
                .iter()
                .all(|&(c, want)| report.verdict(c).and_then(|v| v.value()) == Some(want))
    }
}

/// Parses every report in `text`: one JSON document, or one per line.
pub fn parse_reports(text: &str) -> Result<Vec<CodeReport>> {
    if let Ok(one) = serde_json::from_str::<CodeReport>(text) {
        return Ok(vec![one]);
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).with_context(|| format!("input line {}: not a report", i + 1))
        })
        .collect()
}

pub fn append(store: &Path, reports: &[CodeReport]) -> Result<()> {
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(store)
        .with_context(|| format!("opening {}", store.display()))?;
    for r in reports {
        writeln!(file, "{}", r.to_json())?;
    }
    Ok(())
}

/// Reads the whole store; a missing file is an empty store.
pub fn load(store: &Path) -> Result<Vec<CodeReport>> {
    let file = match File::open(store) {
        Ok(f) => f,
        Err(e) if e.kind() == ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e).with_context(|| format!("opening {}", store.display())),
    };
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let report = serde_json::from_str(&line)
            .with_context(|| format!("{}: corrupt record on line {}", store.display(), i + 1))?;
        out.push(report);
    }
    Ok(out)
}

//! Parameter sweeps: one recipe, one swept parameter, one CSV row per value.

use std::io::Write;

use anyhow::{bail, Result};
use clap::ValueEnum;
use gtrs::verify::{run_checks, Check, CodeReport, OracleMode, Witness};
use gtrs::Field;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::recipe::{parse_range, Recipe, RecipeArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sweep {
    Eta,
    K,
    Length,
}

pub struct ScanJob<'a> {
    pub recipe: Recipe,
    pub base: &'a RecipeArgs,
    pub field: Option<&'a Field>,
    pub sweep: Sweep,
    pub values: Vec<u64>,
    pub checks: Vec<Check>,
    pub oracle: OracleMode,
}

#[derive(Default)]
pub struct Summary {
    pub rows: usize,
    pub built: usize,
    pub mds: usize,
    pub grs: usize,
    pub mds_grs: usize,
    pub so: usize,
    pub lcd: usize,
}

struct Row {
    value: u64,
    n: String,
    k: String,
    status: String,
    verdicts: [String; 4],
    witness: String,
    report: Option<CodeReport>,
}

/// Expands `nonzero`, `all`, ranges and integers; sorted and deduplicated.
pub fn sweep_values(spec: &str, field: Option<&Field>, sweep: Sweep) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match (tok, field) {
            ("nonzero" | "all", None) => bail!("{tok:?} needs --field"),
            ("nonzero", Some(f)) => out.extend(1..f.order()),
            ("all", Some(f)) => out.extend(0..f.order()),
            _ => out.extend(parse_range(tok)?),
        }
    }
    if sweep == Sweep::Eta {
        if let Some(f) = field {
            if let Some(&bad) = out.iter().find(|&&x| x >= f.order()) {
                bail!("sweep value {bad} is not an element of GF({})", f.order());
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Keeps `count` values chosen with a seeded generator, in ascending order.
pub fn sample_values(mut values: Vec<u64>, count: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    values.shuffle(&mut rng);
    values.truncate(count);
    values.sort_unstable();
    values
}

fn witness_text(w: &Witness) -> String {
    let join = |v: &[usize]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    match w {
        Witness::Columns { positions } => format!("columns {}", join(positions)),
        Witness::Minor { rows, cols } => format!("minor rows {} cols {}", join(rows), join(cols)),
        Witness::GramEntry { row, col } => format!("gram ({row},{col})"),
        Witness::Codeword { values } => format!(
            "codeword {}",
            values
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ),
    }
}

fn run_one(job: &ScanJob, value: u64) -> Row {
    let mut args = job.base.clone();
    match job.sweep {
        Sweep::Eta => args.eta = Some(value),
        Sweep::K => args.k = Some(value as usize),
        Sweep::Length => args.length = Some(value as usize),
    }
    let mut row = Row {
        value,
        n: String::new(),
        k: String::new(),
        status: String::new(),
        verdicts: Default::default(),
        witness: String::new(),
        report: None,
    };
    let spec = match args.build(job.recipe, job.field) {
        Ok(spec) => spec,
        Err(e) => {
            row.status = format!("rejected: {e:#}");
            return row;
        }
    };
    row.n = spec.n().to_string();
    row.k = spec.k().to_string();
    let report = match run_checks(&spec, &job.checks, job.oracle) {
        Ok(r) => r,
        Err(e) => {
            row.status = format!("error: {e}");
            return row;
        }
    };
    row.status = "ok".into();
    let mut witnesses = Vec::new();
    for (slot, check) in Check::ALL.iter().enumerate() {
        let Some(verdict) = report.verdict(*check) else {
            continue;
        };
        row.verdicts[slot] = match verdict.value() {
            Some(b) => b.to_string(),
            None => "skipped".into(),
        };
        if let Some(w) = &verdict.witness {
            witnesses.push(format!("{}: {}", check.key(), witness_text(w)));
        }
    }
    row.witness = witnesses.join("; ");
    row.report = Some(report);
    row
}

/// Runs the job (in parallel) and writes the CSV in ascending sweep order.
pub fn run_scan<W: Write>(job: &ScanJob, out: W) -> Result<Summary> {
    let rows: Vec<Row> = job.values.par_iter().map(|&v| run_one(job, v)).collect();
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record([
        "value", "n", "k", "status", "mds", "grs", "so", "lcd", "witness",
    ])?;
    let mut summary = Summary::default();
    for row in &rows {
        writer.write_record([
            row.value.to_string().as_str(),
            &row.n,
            &row.k,
            &row.status,
            &row.verdicts[0],
            &row.verdicts[1],
            &row.verdicts[2],
            &row.verdicts[3],
            &row.witness,
        ])?;
        summary.rows += 1;
        if let Some(report) = &row.report {
            summary.built += 1;
            let is = |c: Check| report.verdict(c).and_then(|v| v.value()) == Some(true);
            summary.mds += is(Check::Mds) as usize;
            summary.grs += is(Check::Grs) as usize;
            summary.mds_grs += (is(Check::Mds) && is(Check::Grs)) as usize;
            summary.so += is(Check::SelfOrthogonal) as usize;
            summary.lcd += is(Check::Lcd) as usize;
        }
    }
    writer.flush()?;
    Ok(summary)
}

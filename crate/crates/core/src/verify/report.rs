//! Per-code verdict reports with named oracles and re-checkable witnesses.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::duality::{gram, is_lcd, is_self_orthogonal, lcd_by_dual, self_orthogonal_by_dual};
use super::grs::is_grs_equivalent;
use super::mds::{mds_by_distance, mds_by_minors, mds_plus_condition, mds_star_condition};
use crate::codes::{GtrsSpec, LinearCode, SpecDocument};
use crate::error::{Error, Result};
use crate::gf::Fe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Mds,
    Grs,
    SelfOrthogonal,
    Lcd,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Mds, Check::Grs, Check::SelfOrthogonal, Check::Lcd];

    /// Key used in serialized reports.
    pub fn key(self) -> &'static str {
        match self {
            Check::Mds => "mds",
            Check::Grs => "grs_equivalent",
            Check::SelfOrthogonal => "self_orthogonal",
            Check::Lcd => "lcd",
        }
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Check> {
        match s.trim() {
            "mds" => Ok(Check::Mds),
            "grs" | "grs_equivalent" => Ok(Check::Grs),
            "so" | "self_orthogonal" => Ok(Check::SelfOrthogonal),
            "lcd" => Ok(Check::Lcd),
            other => Err(Error::InvalidSpec(format!("unknown check {other:?}"))),
        }
    }
}

/// Which oracles decide a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    /// The analytic predicate where one applies, otherwise the cheapest direct test.
    Fast,
    /// Direct computations only (minors, enumeration, dual-code constructions).
    Brute,
    /// Everything applicable; any disagreement is an error.
    Both,
}

impl FromStr for OracleMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<OracleMode> {
        match s.trim() {
            "fast" => Ok(OracleMode::Fast),
            "brute" => Ok(OracleMode::Brute),
            "both" => Ok(OracleMode::Both),
            other => Err(Error::InvalidSpec(format!("unknown oracle mode {other:?}"))),
        }
    }
}

/// Evidence for a false verdict. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Code positions whose generator columns are linearly dependent.
    Columns { positions: Vec<usize> },
    /// A minor of the inverted parity block violating the GRS criterion:
    /// `rows` are systematic positions and `cols` are redundancy positions.
    Minor { rows: Vec<usize>, cols: Vec<usize> },
    /// A nonzero entry of the Gram matrix.
    GramEntry { row: usize, col: usize },
    /// A nonzero codeword lying in the dual.
    Codeword { values: Vec<u64> },
}

impl Witness {
    /// Re-verifies the witness against the code it was produced for.
    pub fn recheck(&self, code: &LinearCode) -> bool {
        let f = code.field();
        let g = code.generator();
        let zero_based = |v: &[usize]| -> Option<Vec<usize>> {
            v.iter()
                .map(|&p| p.checked_sub(1).filter(|&i| i < code.n()))
                .collect()
        };
        match self {
            Witness::Columns { positions } => match zero_based(positions) {
                Some(cols) if cols.len() == code.k() => g
                    .select_columns(&cols)
                    .det()
                    .map(|d| d.is_zero())
                    .unwrap_or(false),
                _ => false,
            },
            Witness::Minor { rows, cols } => {
                let (Some(rows), Some(cols)) = (zero_based(rows), zero_based(cols)) else {
                    return false;
                };
                let Ok(sys) = g.systematic_form() else {
                    return false;
                };
                let k = code.k();
                let locate = |pos: usize| sys.permutation.iter().position(|&p| p == pos);
                let (Some(ri), Some(ci)) = (
                    rows.iter()
                        .map(|&r| locate(r).filter(|&i| i < k))
                        .collect::<Option<Vec<_>>>(),
                    cols.iter()
                        .map(|&c| locate(c).and_then(|i| i.checked_sub(k)))
                        .collect::<Option<Vec<_>>>(),
                ) else {
                    return false;
                };
                let size = ri.len();
                if size != ci.len() || !(2..=3).contains(&size) {
                    return false;
                }
                let mut m = crate::linalg::Matrix::zeros(f, size, size);
                for (a, &r) in ri.iter().enumerate() {
                    for (b, &c) in ci.iter().enumerate() {
                        match f.inv(sys.parity[(r, c)]) {
                            Ok(x) => m[(a, b)] = x,
                            Err(_) => return false,
                        }
                    }
                }
                let singular = m.det().map(|d| d.is_zero()).unwrap_or(false);
                if size == 2 {
                    singular
                } else {
                    !singular
                }
            }
            Witness::GramEntry { row, col } => {
                let gm = gram(code);
                *row >= 1
                    && *col >= 1
                    && *row <= gm.rows()
                    && *col <= gm.cols()
                    && !gm[(row - 1, col - 1)].is_zero()
            }
            Witness::Codeword { values } => {
                let Ok(cw) = values
                    .iter()
                    .map(|&x| f.elem(x))
                    .collect::<Result<Vec<Fe>>>()
                else {
                    return false;
                };
                cw.len() == code.n()
                    && cw.iter().any(|x| !x.is_zero())
                    && g.row_space_contains(&cw).unwrap_or(false)
                    && (0..code.k()).all(|i| {
                        f.sum(g.row(i).iter().zip(&cw).map(|(&a, &b)| f.mul(a, b)))
                            .is_zero()
                    })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VerdictValue {
    Decided(bool),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: VerdictValue,
    /// Oracles that produced the value, joined with `+`.
    pub oracle: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    fn decided(value: bool, oracles: &[&str], witness: Option<Witness>) -> Verdict {
        Verdict {
            value: VerdictValue::Decided(value),
            oracle: oracles.join("+"),
            witness,
            note: None,
        }
    }

    fn skipped(reason: &str) -> Verdict {
        Verdict {
            value: VerdictValue::Skipped("skipped".into()),
            oracle: String::new(),
            witness: None,
            note: Some(reason.into()),
        }
    }

    pub fn value(&self) -> Option<bool> {
        match self.value {
            VerdictValue::Decided(b) => Some(b),
            VerdictValue::Skipped(_) => None,
        }
    }

    fn with_note(mut self, note: Option<String>) -> Verdict {
        self.note = note;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub spec: SpecDocument,
    /// SHA-256 of the canonical spec JSON.
    pub digest: String,
    pub verdicts: BTreeMap<String, Verdict>,
}

impl CodeReport {
    pub fn verdict(&self, check: Check) -> Option<&Verdict> {
        self.verdicts.get(check.key())
    }

    /// Every requested verdict is true (skipped ones count as not true).
    pub fn all_true(&self) -> bool {
        self.verdicts.values().all(|v| v.value() == Some(true))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

pub fn spec_digest(spec: &GtrsSpec) -> String {
    hex::encode(Sha256::digest(spec.to_json().as_bytes()))
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|&i| i + 1).collect()
}

fn disagreement(check: Check, detail: String) -> Error {
    Error::OracleDisagreement {
        check: check.key().into(),
        detail,
    }
}

fn mds_verdict(spec: &GtrsSpec, code: &LinearCode, mode: OracleMode) -> Result<Verdict> {
    let f = spec.field();
    let k = spec.k();
    let analytic: Option<(&str, Option<Vec<usize>>)> = match spec.single_hook() {
        None if spec.is_grs() => Some(("distinct_points", None)),
        Some(hk) if hk.t == 1 && hk.h == 0 => spec.finite_alpha().map(|alpha| {
            (
                "product_condition",
                mds_star_condition(f, &alpha, k, hk.eta),
            )
        }),
        Some(hk) if hk.t == 1 && hk.h + 1 == k => Some((
            "sum_condition",
            mds_plus_condition(f, spec.alpha(), k, hk.eta),
        )),
        _ => None,
    };
    let mut oracles: Vec<&str> = Vec::new();
    let mut results: Vec<(bool, Option<Vec<usize>>)> = Vec::new();
    let mut note = None;
    let use_analytic = mode != OracleMode::Brute && analytic.is_some();
    if let (true, Some((name, w))) = (use_analytic, analytic) {
        oracles.push(name);
        results.push((w.is_none(), w));
    }
    if mode != OracleMode::Fast || !use_analytic {
        let w = mds_by_minors(code);
        oracles.push("minors");
        results.push((w.is_none(), w));
    }
    if mode != OracleMode::Fast {
        match mds_by_distance(code) {
            Ok(r) => {
                oracles.push("distance");
                results.push((r.mds, None));
                note = Some(format!("minimum distance {}", r.d));
            }
            Err(Error::TooLarge { .. }) => {
                note = Some("distance enumeration skipped: code too large".into())
            }
            Err(e) => return Err(e),
        }
    }
    let value = results[0].0;
    if let Some(i) = results.iter().position(|r| r.0 != value) {
        return Err(disagreement(
            Check::Mds,
            format!(
                "{} says {value}, {} says {}",
                oracles[0], oracles[i], !value
            ),
        ));
    }
    let witness = results
        .iter()
        .find_map(|r| r.1.as_ref())
        .map(|w| Witness::Columns {
            positions: one_based(w),
        });
    Ok(Verdict::decided(value, &oracles, witness).with_note(note))
}

fn grs_verdict(spec: &GtrsSpec, code: &LinearCode, mode: OracleMode) -> Result<Verdict> {
    let criterion = match is_grs_equivalent(code) {
        Ok(w) => w,
        Err(Error::NotMds) => return Ok(Verdict::skipped("code is not MDS")),
        Err(e) => return Err(e),
    };
    let witness = criterion.map(|w| Witness::Minor {
        rows: one_based(&w.rows),
        cols: one_based(&w.cols),
    });
    let value = witness.is_none();
    if spec.is_grs() && mode != OracleMode::Brute {
        if mode == OracleMode::Both && !value {
            return Err(disagreement(
                Check::Grs,
                "hook-free spec failed the minor criterion".into(),
            ));
        }
        let oracles: &[&str] = if mode == OracleMode::Both {
            &["hook_free", "inverted_parity_minors"]
        } else {
            &["hook_free"]
        };
        return Ok(Verdict::decided(true, oracles, None));
    }
    Ok(Verdict::decided(
        value,
        &["inverted_parity_minors"],
        witness,
    ))
}

fn so_verdict(code: &LinearCode, mode: OracleMode) -> Result<Verdict> {
    let entry = is_self_orthogonal(code);
    let by_gram = entry.is_none();
    let witness = entry.map(|(r, c)| Witness::GramEntry {
        row: r + 1,
        col: c + 1,
    });
    match mode {
        OracleMode::Fast => Ok(Verdict::decided(by_gram, &["gram"], witness)),
        OracleMode::Brute => {
            let v = self_orthogonal_by_dual(code);
            Ok(Verdict::decided(
                v,
                &["dual_containment"],
                if v { None } else { witness },
            ))
        }
        OracleMode::Both => {
            if self_orthogonal_by_dual(code) != by_gram {
                return Err(disagreement(
                    Check::SelfOrthogonal,
                    "gram and dual containment differ".into(),
                ));
            }
            Ok(Verdict::decided(
                by_gram,
                &["gram", "dual_containment"],
                witness,
            ))
        }
    }
}

fn lcd_verdict(code: &LinearCode, mode: OracleMode) -> Result<Verdict> {
    let w = is_lcd(code);
    let by_gram = w.is_none();
    let witness = w.map(|cw| Witness::Codeword {
        values: cw.iter().map(|x| x.value()).collect(),
    });
    match mode {
        OracleMode::Fast => Ok(Verdict::decided(by_gram, &["gram_determinant"], witness)),
        OracleMode::Brute => {
            let v = lcd_by_dual(code);
            Ok(Verdict::decided(
                v,
                &["dual_intersection_rank"],
                if v { None } else { witness },
            ))
        }
        OracleMode::Both => {
            if lcd_by_dual(code) != by_gram {
                return Err(disagreement(
                    Check::Lcd,
                    "gram determinant and dual rank differ".into(),
                ));
            }
            Ok(Verdict::decided(
                by_gram,
                &["gram_determinant", "dual_intersection_rank"],
                witness,
            ))
        }
    }
}

/// Runs the requested checks. Every witness is re-verified before the report is returned.
pub fn run_checks(spec: &GtrsSpec, checks: &[Check], mode: OracleMode) -> Result<CodeReport> {
    let code = spec.generator_matrix()?;
    let mut verdicts = BTreeMap::new();
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    for check in checks {
        let v = match check {
            Check::Mds => mds_verdict(spec, &code, mode)?,
            Check::Grs => grs_verdict(spec, &code, mode)?,
            Check::SelfOrthogonal => so_verdict(&code, mode)?,
            Check::Lcd => lcd_verdict(&code, mode)?,
        };
        if let Some(w) = &v.witness {
            if !w.recheck(&code) {
                return Err(disagreement(
                    check,
                    format!("witness {w:?} does not re-verify"),
                ));
            }
        }
        verdicts.insert(check.key().to_string(), v);
    }
    Ok(CodeReport {
        spec: SpecDocument::from_spec(spec),
        digest: spec_digest(spec),
        verdicts,
    })
}

//! JSON form of a [`GtrsSpec`].

use serde::{Deserialize, Serialize};

use super::{EvalPoint, GtrsSpec, TwistHook};
use crate::error::{Error, Result};
use crate::gf::Field;

/// An evaluation point literal: an integer encoding or the string `"inf"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointLiteral {
    Finite(u64),
    Named(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookDoc {
    pub t: usize,
    pub h: usize,
    pub eta: u64,
}

/// `{"field", "n", "k", "alpha", "v", "hooks"}`; a missing `v` means all ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecDocument {
    pub field: String,
    pub n: usize,
    pub k: usize,
    pub alpha: Vec<PointLiteral>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<u64>>,
    #[serde(default)]
    pub hooks: Vec<HookDoc>,
}

impl SpecDocument {
    pub fn from_json(s: &str) -> Result<SpecDocument> {
        serde_json::from_str(s).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec documents always serialize")
    }

    pub fn to_spec(&self) -> Result<GtrsSpec> {
        let field = Field::parse(&self.field)?;
        if self.alpha.len() != self.n {
            return Err(Error::InvalidSpec(format!(
                "n = {} but {} evaluation points given",
                self.n,
                self.alpha.len()
            )));
        }
        let alpha = self
            .alpha
            .iter()
            .map(|a| match a {
                PointLiteral::Finite(x) => Ok(EvalPoint::Finite(field.elem(*x)?)),
                PointLiteral::Named(s) if s == "inf" => Ok(EvalPoint::Infinity),
                PointLiteral::Named(s) => {
                    Err(Error::InvalidSpec(format!("bad point literal {s:?}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let v = match &self.v {
            Some(v) => Some(
                v.iter()
                    .map(|&x| field.elem(x))
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        let hooks = self
            .hooks
            .iter()
            .map(|hk| Ok(TwistHook::new(hk.t, hk.h, field.elem(hk.eta)?)))
            .collect::<Result<Vec<_>>>()?;
        GtrsSpec::new(&field, self.k, alpha, v, hooks)
    }

    /// Document for a spec; `v` is omitted when it is all ones.
    pub fn from_spec(spec: &GtrsSpec) -> SpecDocument {
        let alpha = spec
            .alpha()
            .iter()
            .map(|a| match a {
                EvalPoint::Finite(x) => PointLiteral::Finite(x.value()),
                EvalPoint::Infinity => PointLiteral::Named("inf".into()),
            })
            .collect();
        let v = if spec.v().iter().all(|x| x.value() == 1) {
            None
        } else {
            Some(spec.v().iter().map(|x| x.value()).collect())
        };
        SpecDocument {
            field: spec.field().spec_string(),
            n: spec.n(),
            k: spec.k(),
            alpha,
            v,
            hooks: spec
                .hooks()
                .iter()
                .map(|hk| HookDoc {
                    t: hk.t,
                    h: hk.h,
                    eta: hk.eta.value(),
                })
                .collect(),
        }
    }
}

impl GtrsSpec {
    pub fn to_json(&self) -> String {
        SpecDocument::from_spec(self).to_json()
    }

    pub fn from_json(s: &str) -> Result<GtrsSpec> {
        SpecDocument::from_json(s)?.to_spec()
    }
}

//! Generalized twisted Reed-Solomon codes as evaluation codes.
//!
//! A [`GtrsSpec`] with no hooks is an ordinary GRS code. Evaluation at infinity returns the
//! message coefficient `f_{k-1}` and is only defined for hook-free codes and for the single
//! `(t, h) = (1, k-1)` twist.

mod document;

pub use document::{HookDoc, PointLiteral, SpecDocument};

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::Matrix;

/// An evaluation point: a field element or the point at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EvalPoint {
    Finite(Fe),
    Infinity,
}

impl EvalPoint {
    pub fn finite(self) -> Option<Fe> {
        match self {
            EvalPoint::Finite(x) => Some(x),
            EvalPoint::Infinity => None,
        }
    }

    pub fn is_infinity(self) -> bool {
        self == EvalPoint::Infinity
    }
}

impl From<Fe> for EvalPoint {
    fn from(x: Fe) -> Self {
        EvalPoint::Finite(x)
    }
}

/// One twist: adds `eta * f_h * x^(k-1+t)` to the message polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistHook {
    pub t: usize,
    pub h: usize,
    pub eta: Fe,
}

impl TwistHook {
    pub fn new(t: usize, h: usize, eta: Fe) -> TwistHook {
        TwistHook { t, h, eta }
    }
}

/// Whether hooks allow an evaluation point at infinity.
fn infinity_allowed(hooks: &[TwistHook], k: usize) -> bool {
    match hooks {
        [] => true,
        [hk] => hk.t == 1 && hk.h + 1 == k,
        _ => false,
    }
}

/// Full description of a GTRS code: points, column multipliers, dimension and twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtrsSpec {
    field: Field,
    k: usize,
    alpha: Vec<EvalPoint>,
    v: Vec<Fe>,
    hooks: Vec<TwistHook>,
}

impl GtrsSpec {
    /// Validates and normalizes (hooks sorted by `h`). `v = None` means all ones.
    pub fn new(
        field: &Field,
        k: usize,
        alpha: Vec<EvalPoint>,
        v: Option<Vec<Fe>>,
        mut hooks: Vec<TwistHook>,
    ) -> Result<GtrsSpec> {
        let n = alpha.len();
        if k == 0 || k > n {
            return Err(Error::InvalidSpec(format!(
                "need 1 <= k <= n, got k = {k}, n = {n}"
            )));
        }
        let mut seen = HashSet::new();
        for (i, &a) in alpha.iter().enumerate() {
            if let EvalPoint::Finite(x) = a {
                if !field.contains(x) {
                    return Err(Error::NotAnElement {
                        value: x.value(),
                        q: field.order(),
                    });
                }
            }
            if !seen.insert(a) {
                let j = alpha.iter().position(|&b| b == a).unwrap_or(0);
                return Err(Error::RepeatedPoint(j, i));
            }
        }
        let v = v.unwrap_or_else(|| vec![Fe::ONE; n]);
        if v.len() != n {
            return Err(Error::InvalidSpec(format!(
                "{} column multipliers for {n} points",
                v.len()
            )));
        }
        if let Some(i) = v.iter().position(|x| x.is_zero()) {
            return Err(Error::ZeroMultiplier(i));
        }
        if let Some(x) = v.iter().find(|x| !field.contains(**x)) {
            return Err(Error::NotAnElement {
                value: x.value(),
                q: field.order(),
            });
        }
        hooks.sort_by_key(|hk| hk.h);
        let mut ts = HashSet::new();
        for (j, hk) in hooks.iter().enumerate() {
            if hk.h >= k {
                return Err(Error::InvalidSpec(format!(
                    "hook h = {} outside 0..{k}",
                    hk.h
                )));
            }
            if hk.t == 0 || hk.t > n - k {
                return Err(Error::InvalidSpec(format!(
                    "hook t = {} outside 1..={}",
                    hk.t,
                    n - k
                )));
            }
            if j > 0 && hooks[j - 1].h == hk.h {
                return Err(Error::InvalidSpec(format!(
                    "repeated hook position h = {}",
                    hk.h
                )));
            }
            if !ts.insert(hk.t) {
                return Err(Error::InvalidSpec(format!(
                    "repeated twist shift t = {}",
                    hk.t
                )));
            }
            if hk.eta.is_zero() || !field.contains(hk.eta) {
                return Err(Error::InvalidSpec(
                    "hook coefficients must be nonzero field elements".into(),
                ));
            }
        }
        if alpha.contains(&EvalPoint::Infinity) && !infinity_allowed(&hooks, k) {
            return Err(Error::InfinityUnsupported);
        }
        Ok(GtrsSpec {
            field: field.clone(),
            k,
            alpha,
            v,
            hooks,
        })
    }

    /// Twisted Reed-Solomon code (all multipliers one) on finite points.
    pub fn trs(field: &Field, k: usize, alpha: &[Fe], hooks: Vec<TwistHook>) -> Result<GtrsSpec> {
        GtrsSpec::new(
            field,
            k,
            alpha.iter().map(|&a| a.into()).collect(),
            None,
            hooks,
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alpha(&self) -> &[EvalPoint] {
        &self.alpha
    }

    /// Finite evaluation points, or `None` if infinity is among them.
    pub fn finite_alpha(&self) -> Option<Vec<Fe>> {
        self.alpha.iter().map(|a| a.finite()).collect()
    }

    pub fn v(&self) -> &[Fe] {
        &self.v
    }

    pub fn hooks(&self) -> &[TwistHook] {
        &self.hooks
    }

    pub fn is_grs(&self) -> bool {
        self.hooks.is_empty()
    }

    /// The single hook as `(t, h, eta)` when there is exactly one.
    pub fn single_hook(&self) -> Option<TwistHook> {
        match self.hooks.as_slice() {
            [hk] => Some(*hk),
            _ => None,
        }
    }

    /// Same code with different column multipliers.
    pub fn with_multipliers(&self, v: Vec<Fe>) -> Result<GtrsSpec> {
        GtrsSpec::new(
            &self.field,
            self.k,
            self.alpha.clone(),
            Some(v),
            self.hooks.clone(),
        )
    }

    /// Same points and multipliers with the given hooks.
    pub fn with_hooks(&self, hooks: Vec<TwistHook>) -> Result<GtrsSpec> {
        GtrsSpec::new(
            &self.field,
            self.k,
            self.alpha.clone(),
            Some(self.v.clone()),
            hooks,
        )
    }

    pub fn polynomial(&self, message: &[Fe]) -> Result<TwistedPolynomial> {
        TwistedPolynomial::new(self.k, message.to_vec(), self.hooks.clone())
    }

    /// Codeword by pointwise evaluation `(v_i f(alpha_i))`, independent of the generator matrix.
    pub fn evaluate_message(&self, message: &[Fe]) -> Result<Vec<Fe>> {
        let tp = self.polynomial(message)?;
        self.alpha
            .iter()
            .zip(&self.v)
            .map(|(&a, &vi)| Ok(self.field.mul(vi, tp.evaluate(&self.field, a)?)))
            .collect()
    }

    /// Generator matrix: row `i` is the evaluation of the unit message `e_i`.
    pub fn generator_matrix(&self) -> Result<LinearCode> {
        let f = &self.field;
        let k = self.k;
        let g = Matrix::from_fn(f, k, self.n(), |i, j| {
            let entry = match self.alpha[j] {
                EvalPoint::Finite(a) => {
                    let mut e = f.pow(a, i as u64);
                    for hk in self.hooks.iter().filter(|hk| hk.h == i) {
                        e = f.add(e, f.mul(hk.eta, f.pow(a, (k - 1 + hk.t) as u64)));
                    }
                    e
                }
                EvalPoint::Infinity => {
                    if i == k - 1 {
                        Fe::ONE
                    } else {
                        Fe::ZERO
                    }
                }
            };
            f.mul(self.v[j], entry)
        });
        LinearCode::new(g)
    }
}

/// A message `(f_0, ..., f_{k-1})` together with the twists applied to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedPolynomial {
    k: usize,
    message: Vec<Fe>,
    hooks: Vec<TwistHook>,
}

impl TwistedPolynomial {
    pub fn new(k: usize, message: Vec<Fe>, hooks: Vec<TwistHook>) -> Result<TwistedPolynomial> {
        if message.len() != k {
            return Err(Error::MessageLength {
                expected: k,
                found: message.len(),
            });
        }
        if hooks.iter().any(|hk| hk.h >= k || hk.t == 0) {
            return Err(Error::InvalidSpec("hook out of range".into()));
        }
        Ok(TwistedPolynomial { k, message, hooks })
    }

    pub fn message(&self) -> &[Fe] {
        &self.message
    }

    /// Dense coefficients `f_0 .. f_{k-1+max t}` with twist terms added at `k-1+t`.
    pub fn expand(&self, field: &Field) -> Vec<Fe> {
        let len = self.k + self.hooks.iter().map(|hk| hk.t).max().unwrap_or(0);
        let mut c = self.message.clone();
        c.resize(len, Fe::ZERO);
        for hk in &self.hooks {
            let pos = self.k - 1 + hk.t;
            c[pos] = field.add(c[pos], field.mul(hk.eta, self.message[hk.h]));
        }
        c
    }

    pub fn evaluate(&self, field: &Field, pt: EvalPoint) -> Result<Fe> {
        match pt {
            EvalPoint::Finite(x) => Ok(self
                .expand(field)
                .iter()
                .rev()
                .fold(Fe::ZERO, |acc, &c| field.add(field.mul(acc, x), c))),
            EvalPoint::Infinity => {
                if infinity_allowed(&self.hooks, self.k) {
                    Ok(self.message[self.k - 1])
                } else {
                    Err(Error::InfinityUnsupported)
                }
            }
        }
    }
}

/// A linear code given by a full-rank generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: Matrix,
}

impl LinearCode {
    pub fn new(generator: Matrix) -> Result<LinearCode> {
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(Error::RankDeficient {
                rank,
                expected: generator.rows(),
            });
        }
        Ok(LinearCode { generator })
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn encode(&self, message: &[Fe]) -> Result<Vec<Fe>> {
        if message.len() != self.k() {
            return Err(Error::MessageLength {
                expected: self.k(),
                found: message.len(),
            });
        }
        self.generator.vec_mul(message)
    }

    /// Euclidean dual, generated by a basis of the right kernel of the generator.
    pub fn dual(&self) -> LinearCode {
        LinearCode {
            generator: self.generator.kernel_basis(),
        }
    }

    /// `φ_{π,v}`: coordinate `i` of the image is `v_i * c_{π(i)}`.
    pub fn apply_equivalence(&self, perm: &[usize], v: &[Fe]) -> Result<LinearCode> {
        let n = self.n();
        if perm.len() != n || v.len() != n {
            return Err(Error::BadPermutation(n));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadPermutation(n));
            }
        }
        if let Some(i) = v.iter().position(|x| x.is_zero()) {
            return Err(Error::ZeroMultiplier(i));
        }
        let f = self.field();
        let g = &self.generator;
        Ok(LinearCode {
            generator: Matrix::from_fn(f, g.rows(), n, |r, i| f.mul(v[i], g[(r, perm[i])])),
        })
    }
}

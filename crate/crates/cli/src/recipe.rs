//! Recipe parameters shared by `construct` and `scan`.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use gtrs::construct::{
    lcd_mds_char2, lcd_subgroup_multitwist, mds_subfield_chain, plus_coset_mds,
    plus_oddchar_extended_mds, self_orthogonal_gtrs, star_char2_extended_mds, star_coset_mds,
    EmitOptions, MultitwistOptions,
};
use gtrs::gf::Subgroup;
use gtrs::{EvalPoint, Fe, Field, GtrsSpec, TwistHook};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Recipe {
    /// Plain (generalized) twisted code from explicit points and hooks.
    Twist,
    /// Twist (1,0,eta) on a union of cosets of a multiplicative subgroup, plus 0.
    StarCoset,
    /// Extended (1,0) twist over GF(2^m) with extra points from one coset.
    StarChar2,
    /// Twist (1,k-1,eta) on a union of cosets of an additive subgroup, plus infinity.
    PlusCoset,
    /// Extended (1,k-1) twist over GF(p^m), p odd, with extra points from one coset.
    PlusOddchar,
    /// Self-orthogonal code with multipliers from the dual kernel vector.
    SelfOrthogonal,
    /// LCD MDS code over GF(2^m) from a half-size additive coset union.
    LcdChar2,
    /// Multi-twist MDS code with twist coefficients in a subfield chain.
    SubfieldChain,
    /// LCD MDS multi-twist code on a subgroup of GF(q0)^*.
    LcdMultitwist,
}

#[derive(Clone, Debug, Default, Args)]
pub struct RecipeArgs {
    /// Code dimension.
    #[arg(long)]
    pub k: Option<usize>,
    /// Twist coefficient.
    #[arg(long)]
    pub eta: Option<u64>,
    /// Hook exponent offset t (twist recipe).
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Hook message index h.
    #[arg(long, default_value_t = 0)]
    pub h: usize,
    /// Hooks as t:h:eta triples, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub hooks: Vec<String>,
    /// Evaluation points: integers, ranges a..b, "inf", "all" or "nonzero".
    #[arg(long)]
    pub alpha: Option<String>,
    /// Column multipliers (twist recipe).
    #[arg(long, value_delimiter = ',')]
    pub v: Vec<u64>,
    /// Order of the multiplicative subgroup G.
    #[arg(long)]
    pub subgroup_order: Option<u64>,
    /// Spanning set of the additive subgroup V.
    #[arg(long, value_delimiter = ',')]
    pub basis: Vec<u64>,
    /// Coset representatives.
    #[arg(long, value_delimiter = ',')]
    pub reps: Vec<u64>,
    /// Extra points for star-char2.
    #[arg(long, value_delimiter = ',')]
    pub a_list: Vec<u64>,
    /// Extra points for plus-oddchar.
    #[arg(long, value_delimiter = ',')]
    pub c_list: Vec<u64>,
    /// Leave out the point 0.
    #[arg(long)]
    pub no_zero: bool,
    /// Leave out the point at infinity.
    #[arg(long)]
    pub no_infinity: bool,
    /// Scaling constant for lcd-char2.
    #[arg(long)]
    pub beta: Option<u64>,
    /// Base field order for subfield-chain and lcd-multitwist.
    #[arg(long)]
    pub q0: Option<u64>,
    /// Divisibility chain 1 = s_0 < s_1 < ...
    #[arg(long, value_delimiter = ',')]
    pub chain: Vec<u64>,
    /// Code length for lcd-multitwist.
    #[arg(long)]
    pub n: Option<usize>,
    /// Twist coefficients for lcd-multitwist.
    #[arg(long, value_delimiter = ',')]
    pub etas: Vec<u64>,
    /// Accept lcd-multitwist top fields beyond the default size limit.
    #[arg(long)]
    pub allow_large_tower: bool,
    /// Keep only the first LENGTH points.
    #[arg(long)]
    pub length: Option<usize>,
    /// Emit the code even when the recipe's hypotheses fail.
    #[arg(long)]
    pub force: bool,
}

/// Parses a list like `0,3..5,inf`; `all` and `nonzero` expand over the field.
pub fn parse_points(field: &Field, s: &str) -> Result<Vec<EvalPoint>> {
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match tok {
            "inf" => out.push(EvalPoint::Infinity),
            "all" => out.extend(field.elements().map(EvalPoint::from)),
            "nonzero" => out.extend(field.nonzero_elements().map(EvalPoint::from)),
            _ => {
                for x in parse_range(tok)? {
                    out.push(field.elem(x)?.into());
                }
            }
        }
    }
    Ok(out)
}

/// `a..b` (inclusive) or a single integer.
pub fn parse_range(tok: &str) -> Result<Vec<u64>> {
    match tok.split_once("..") {
        Some((a, b)) => {
            let a: u64 = a
                .trim()
                .parse()
                .with_context(|| format!("bad range {tok:?}"))?;
            let b: u64 = b
                .trim()
                .parse()
                .with_context(|| format!("bad range {tok:?}"))?;
            Ok((a..=b).collect())
        }
        None => Ok(vec![tok
            .parse()
            .with_context(|| format!("bad integer {tok:?}"))?]),
    }
}

fn elems(field: &Field, xs: &[u64]) -> Result<Vec<Fe>> {
    Ok(xs
        .iter()
        .map(|&x| field.elem(x))
        .collect::<gtrs::Result<_>>()?)
}

fn parse_hook(field: &Field, s: &str) -> Result<TwistHook> {
    let parts: Vec<&str> = s.split(':').collect();
    let [t, h, eta] = parts.as_slice() else {
        bail!("hook {s:?} is not of the form t:h:eta");
    };
    Ok(TwistHook::new(
        t.parse().with_context(|| format!("bad hook {s:?}"))?,
        h.parse().with_context(|| format!("bad hook {s:?}"))?,
        field.parse_elem(eta)?,
    ))
}

impl Recipe {
    pub fn name(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }
}

impl RecipeArgs {
    fn need<T: Copy>(value: Option<T>, flag: &str, recipe: Recipe) -> Result<T> {
        value.ok_or_else(|| anyhow!("--{flag} is required for {}", recipe.name()))
    }

    fn emit(&self) -> EmitOptions {
        EmitOptions {
            length: self.length,
            force: self.force,
        }
    }

    fn finite_alpha(&self, field: &Field, recipe: Recipe) -> Result<Vec<Fe>> {
        let s = self
            .alpha
            .as_deref()
            .ok_or_else(|| anyhow!("--alpha is required for {}", recipe.name()))?;
        parse_points(field, s)?
            .into_iter()
            .map(|p| {
                p.finite()
                    .ok_or_else(|| anyhow!("{} takes finite points only", recipe.name()))
            })
            .collect()
    }

    /// Builds the code described by `recipe`. lcd-multitwist ignores `field` and reads its
    /// etas in the top field of the chain.
    pub fn build(&self, recipe: Recipe, field: Option<&Field>) -> Result<GtrsSpec> {
        if recipe == Recipe::LcdMultitwist {
            let q0 = Self::need(self.q0, "q0", recipe)?;
            let n = Self::need(self.n, "n", recipe)?;
            let k = Self::need(self.k, "k", recipe)?;
            let opts = MultitwistOptions {
                allow_large_tower: self.allow_large_tower,
            };
            let etas = if self.etas.is_empty() {
                None
            } else {
                let [(p, e)] = gtrs::gf::prime_factors(q0)[..] else {
                    bail!("{q0} is not a prime power");
                };
                let top_degree = self.chain.last().copied().unwrap_or(1) as usize * e as usize;
                let top = Field::new(p, top_degree, None)?;
                Some(elems(&top, &self.etas)?)
            };
            return lcd_subgroup_multitwist(q0, &self.chain, n, k, etas.as_deref(), opts).map_err(
                |e| match e {
                    gtrs::Error::TowerTooLarge(_) => {
                        anyhow!("{e}; pass --allow-large-tower to build it anyway")
                    }
                    e => e.into(),
                },
            );
        }
        let f = field.ok_or_else(|| anyhow!("--field is required for {}", recipe.name()))?;
        let k = Self::need(self.k, "k", recipe)?;
        let eta = |r: Recipe| -> Result<Fe> { Ok(f.elem(Self::need(self.eta, "eta", r)?)?) };
        let spec = match recipe {
            Recipe::Twist => {
                let s = self
                    .alpha
                    .as_deref()
                    .ok_or_else(|| anyhow!("--alpha is required for {}", recipe.name()))?;
                let alpha = parse_points(f, s)?;
                let hooks = if !self.hooks.is_empty() {
                    self.hooks
                        .iter()
                        .map(|h| parse_hook(f, h))
                        .collect::<Result<_>>()?
                } else if let Some(e) = self.eta {
                    vec![TwistHook::new(self.t, self.h, f.elem(e)?)]
                } else {
                    vec![]
                };
                let v = if self.v.is_empty() {
                    None
                } else {
                    Some(elems(f, &self.v)?)
                };
                GtrsSpec::new(f, k, alpha, v, hooks)?
            }
            Recipe::StarCoset => {
                let d = Self::need(self.subgroup_order, "subgroup-order", recipe)?;
                let g = Subgroup::multiplicative(f, d)?;
                star_coset_mds(
                    f,
                    &g,
                    &elems(f, &self.reps)?,
                    !self.no_zero,
                    k,
                    eta(recipe)?,
                    self.emit(),
                )?
            }
            Recipe::StarChar2 => {
                let a = elems(f, &self.a_list)?;
                star_char2_extended_mds(
                    f,
                    k,
                    (!a.is_empty()).then_some(a.as_slice()),
                    eta(recipe)?,
                    !self.no_zero,
                    self.emit(),
                )?
            }
            Recipe::PlusCoset => {
                let v = Subgroup::additive(f, &elems(f, &self.basis)?)?;
                plus_coset_mds(
                    f,
                    &v,
                    &elems(f, &self.reps)?,
                    !self.no_infinity,
                    k,
                    eta(recipe)?,
                    self.emit(),
                )?
            }
            Recipe::PlusOddchar => {
                let c = elems(f, &self.c_list)?;
                plus_oddchar_extended_mds(
                    f,
                    k,
                    (!c.is_empty()).then_some(c.as_slice()),
                    !self.no_infinity,
                    eta(recipe)?,
                    self.emit(),
                )?
            }
            Recipe::SelfOrthogonal => {
                let alpha = self.finite_alpha(f, recipe)?;
                self_orthogonal_gtrs(f, &alpha, k, self.h, eta(recipe)?)?
            }
            Recipe::LcdChar2 => {
                let v = Subgroup::additive(f, &elems(f, &self.basis)?)?;
                let beta = f.elem(Self::need(self.beta, "beta", recipe)?)?;
                lcd_mds_char2(
                    f,
                    &v,
                    &elems(f, &self.reps)?,
                    k,
                    eta(recipe)?,
                    beta,
                    self.emit(),
                )?
                .0
            }
            Recipe::SubfieldChain => {
                let q0 = Self::need(self.q0, "q0", recipe)?;
                let alpha = self.finite_alpha(f, recipe)?;
                let hooks = self
                    .hooks
                    .iter()
                    .map(|h| parse_hook(f, h))
                    .collect::<Result<Vec<_>>>()?;
                mds_subfield_chain(f, q0, &self.chain, &alpha, k, &hooks)?
            }
            Recipe::LcdMultitwist => unreachable!(),
        };
        Ok(spec)
    }
}

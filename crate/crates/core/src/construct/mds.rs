//! MDS recipes from multiplicative and additive coset unions, and from subfield chains.

use super::{arrange_points, check_dimension, EmitOptions};
use crate::codes::{EvalPoint, GtrsSpec, TwistHook};
use crate::error::{Error, Result};
use crate::gf::{prime_factors, Fe, Field, GroupKind, Subgroup};

fn require(cond: bool, force: bool, err: Error) -> Result<()> {
    if cond || force {
        Ok(())
    } else {
        Err(err)
    }
}

/// Twist `(1, 0, eta)` on a union of multiplicative cosets forming a proper subgroup of
/// `F_q^* / G`, optionally with `0`. MDS whenever `(-1)^k eta` avoids the union.
pub fn star_coset_mds(
    field: &Field,
    group: &Subgroup,
    reps: &[Fe],
    include_zero: bool,
    k: usize,
    eta: Fe,
    opts: EmitOptions,
) -> Result<GtrsSpec> {
    if group.kind() != GroupKind::Multiplicative {
        return Err(Error::NotASubgroup);
    }
    let sel = group.quotient_subgroup_union(field, reps, !opts.force)?;
    require(
        sel.is_proper_quotient_subgroup(field),
        opts.force,
        Error::NotAProperSubgroup,
    )?;
    let signed = if k.is_multiple_of(2) {
        eta
    } else {
        field.neg(eta)
    };
    require(
        !eta.is_zero() && !sel.contains(signed),
        opts.force,
        Error::EtaInForbiddenSet,
    )?;
    let tail = include_zero.then_some(EvalPoint::Finite(Fe::ZERO));
    let alpha = arrange_points(sel.union(), &[], tail, opts.length)?;
    check_dimension(alpha.len(), k)?;
    GtrsSpec::new(field, k, alpha, None, vec![TwistHook::new(1, 0, eta)])
}

/// Ingredients of the characteristic-2 extension: the smallest prime `p | 2^m - 1` and the
/// subgroup `G` of order `(2^m - 1)/p`.
#[derive(Clone, Debug)]
pub struct Char2Extension {
    pub p: u64,
    pub group: Subgroup,
}

impl Char2Extension {
    pub fn new(field: &Field) -> Result<Char2Extension> {
        if field.characteristic() != 2 {
            return Err(Error::Precondition(
                "the field must have characteristic 2".into(),
            ));
        }
        let order = field.order() - 1;
        let p = prime_factors(order).first().map(|&(r, _)| r).unwrap_or(1);
        if p == order || order < 2 {
            return Err(Error::MersennePrimeField(field.degree()));
        }
        let group = Subgroup::multiplicative(field, order / p)?;
        Ok(Char2Extension { p, group })
    }

    /// The first `p - 2` elements (ascending) of the coset `g G` for the primitive `g`.
    pub fn default_extension(&self, field: &Field) -> Vec<Fe> {
        let coset = self.group.coset(field, field.primitive_element());
        coset.into_iter().take(self.p as usize - 2).collect()
    }
}

/// Twist `(1, 0, eta)` on `G ∪ {a_1..a_r} ∪ {0}` over GF(2^m), where `G` has index the
/// smallest prime `p` dividing `2^m - 1`, the `a_i` (at most `p - 2`) lie in one
/// nontrivial coset `γG`, and `eta ∈ γG`.
pub fn star_char2_extended_mds(
    field: &Field,
    k: usize,
    a_list: Option<&[Fe]>,
    eta: Fe,
    include_zero: bool,
    opts: EmitOptions,
) -> Result<GtrsSpec> {
    let ext = Char2Extension::new(field)?;
    let g = &ext.group;
    let a_list: Vec<Fe> = match a_list {
        Some(a) => a.to_vec(),
        None => {
            if eta.is_zero() || g.contains(eta) {
                return Err(Error::EtaNotInRequiredCoset);
            }
            g.coset(field, eta)
                .into_iter()
                .take(ext.p as usize - 2)
                .collect()
        }
    };
    if !opts.force {
        if a_list.len() + 2 > ext.p as usize {
            return Err(Error::BadCosetElement(format!(
                "at most {} extension elements allowed, got {}",
                ext.p - 2,
                a_list.len()
            )));
        }
        let key = g.coset_key(field, eta);
        if eta.is_zero() || g.contains(eta) {
            return Err(Error::EtaNotInRequiredCoset);
        }
        for (i, &a) in a_list.iter().enumerate() {
            if a.is_zero() || g.coset_key(field, a) != key {
                return Err(Error::BadCosetElement(format!(
                    "element {i} = {a} is not in the coset of eta"
                )));
            }
            if a_list[..i].contains(&a) {
                return Err(Error::BadCosetElement(format!(
                    "element {i} = {a} repeated"
                )));
            }
        }
    }
    let tail = include_zero.then_some(EvalPoint::Finite(Fe::ZERO));
    let alpha = arrange_points(g.elements(), &a_list, tail, opts.length)?;
    check_dimension(alpha.len(), k)?;
    GtrsSpec::new(field, k, alpha, None, vec![TwistHook::new(1, 0, eta)])
}

/// Twist `(1, k-1, eta)` on a union of additive cosets forming a proper subgroup of `F_q / V`,
/// optionally with infinity. MDS whenever `(-eta)^{-1}` avoids the union.
pub fn plus_coset_mds(
    field: &Field,
    v: &Subgroup,
    reps: &[Fe],
    include_infinity: bool,
    k: usize,
    eta: Fe,
    opts: EmitOptions,
) -> Result<GtrsSpec> {
    if v.kind() != GroupKind::Additive {
        return Err(Error::NotASubgroup);
    }
    let sel = v.quotient_subgroup_union(field, reps, !opts.force)?;
    require(
        sel.is_proper_quotient_subgroup(field),
        opts.force,
        Error::NotAProperSubgroup,
    )?;
    let forbidden = field
        .inv(field.neg(eta))
        .map(|x| sel.contains(x))
        .unwrap_or(true);
    require(!forbidden, opts.force, Error::EtaInForbiddenSet)?;
    let tail = include_infinity.then_some(EvalPoint::Infinity);
    let alpha = arrange_points(sel.union(), &[], tail, opts.length)?;
    check_dimension(alpha.len(), k)?;
    GtrsSpec::new(field, k, alpha, None, vec![TwistHook::new(1, k - 1, eta)])
}

/// The additive subgroup of elements whose top polynomial-basis digit is zero,
/// i.e. the span of `1, θ, ..., θ^(m-2)`; it has order `p^(m-1)`.
pub fn default_hyperplane(field: &Field) -> Result<Subgroup> {
    let basis: Vec<Fe> = (0..field.degree().saturating_sub(1))
        .map(|i| field.pow(field.theta(), i as u64))
        .collect();
    Subgroup::additive(field, &basis)
}

/// Twist `(1, k-1, eta)` on `V ∪ {c_1..c_r} ∪ {∞}` over an odd-characteristic GF(p^m), `m > 1`,
/// with `V` of order `p^(m-1)` (see [`default_hyperplane`]), the `c_i` (at most `p - 2`) in one
/// coset `b + V != V`, and `(-eta)^{-1} ∈ (p-1)b + V`.
///
/// Without `c_list` the first `p - 2` elements of `θ^(m-1) + V` are used.
pub fn plus_oddchar_extended_mds(
    field: &Field,
    k: usize,
    c_list: Option<&[Fe]>,
    include_infinity: bool,
    eta: Fe,
    opts: EmitOptions,
) -> Result<GtrsSpec> {
    let p = field.characteristic();
    if p == 2 {
        return Err(Error::Precondition(
            "the field must have odd characteristic".into(),
        ));
    }
    if field.degree() < 2 {
        return Err(Error::Precondition(
            "the field must be a proper extension (m > 1)".into(),
        ));
    }
    let v = default_hyperplane(field)?;
    let c_list: Vec<Fe> = match c_list {
        Some(c) => c.to_vec(),
        None => {
            let b = field.pow(field.theta(), field.degree() as u64 - 1);
            v.coset(field, b).into_iter().take(p as usize - 2).collect()
        }
    };
    let b = c_list
        .first()
        .copied()
        .unwrap_or_else(|| field.pow(field.theta(), field.degree() as u64 - 1));
    if !opts.force {
        if v.contains(b) {
            return Err(Error::BadCosetElement(format!("{b} lies in V")));
        }
        if c_list.len() + 2 > p as usize {
            return Err(Error::BadCosetElement(format!(
                "at most {} extension elements allowed, got {}",
                p - 2,
                c_list.len()
            )));
        }
        let key = v.coset_key(field, b);
        for (i, &c) in c_list.iter().enumerate() {
            if v.coset_key(field, c) != key {
                return Err(Error::BadCosetElement(format!(
                    "element {i} = {c} is not in b + V"
                )));
            }
            if c_list[..i].contains(&c) {
                return Err(Error::BadCosetElement(format!(
                    "element {i} = {c} repeated"
                )));
            }
        }
        let target = field.mul(field.from_int(p as i64 - 1), b);
        let ok = field
            .inv(field.neg(eta))
            .map(|x| v.coset_key(field, x) == v.coset_key(field, target))
            .unwrap_or(false);
        if !ok {
            return Err(Error::EtaNotInRequiredCoset);
        }
    }
    let tail = include_infinity.then_some(EvalPoint::Infinity);
    let alpha = arrange_points(v.elements(), &c_list, tail, opts.length)?;
    check_dimension(alpha.len(), k)?;
    GtrsSpec::new(field, k, alpha, None, vec![TwistHook::new(1, k - 1, eta)])
}

/// Multi-twist code over `GF(q0^s_l)` with points in `GF(q0)` and `eta_i` in
/// `GF(q0^s_i) \ GF(q0^s_{i-1})` for a divisibility chain `1 = s_0 < s_1 < ... < s_l`.
/// Hooks are matched to layers in order of increasing `h`.
pub fn mds_subfield_chain(
    field: &Field,
    q0: u64,
    chain: &[u64],
    alpha: &[Fe],
    k: usize,
    hooks: &[TwistHook],
) -> Result<GtrsSpec> {
    let e = field.base_degree(q0)?;
    if chain.first() != Some(&1) || chain.len() != hooks.len() + 1 {
        return Err(Error::BrokenChain(format!(
            "need a chain 1 = s_0 < ... < s_{} for {} hooks",
            hooks.len(),
            hooks.len()
        )));
    }
    for w in chain.windows(2) {
        if w[1] <= w[0] || w[1] % w[0] != 0 {
            return Err(Error::BrokenChain(format!(
                "{} does not properly divide {}",
                w[0], w[1]
            )));
        }
    }
    let top = *chain.last().expect("chain is nonempty");
    if top * e != field.degree() as u64 {
        return Err(Error::BrokenChain(format!(
            "top of chain is GF({q0}^{top}) but the field is GF({}^{})",
            field.characteristic(),
            field.degree()
        )));
    }
    let n = alpha.len();
    check_dimension(n, k)?;
    if n as u64 > q0 {
        return Err(Error::InvalidSpec(format!("n = {n} exceeds q0 = {q0}")));
    }
    for (i, &a) in alpha.iter().enumerate() {
        if !field.in_subfield(a, 1, q0)? {
            return Err(Error::AlphaNotInBase(i));
        }
    }
    let mut hooks = hooks.to_vec();
    hooks.sort_by_key(|hk| hk.h);
    for (i, hk) in hooks.iter().enumerate() {
        let inside = field.in_subfield(hk.eta, chain[i + 1], q0)?;
        let below = field.in_subfield(hk.eta, chain[i], q0)?;
        if !inside || below {
            return Err(Error::EtaInWrongLayer(i + 1));
        }
    }
    GtrsSpec::trs(field, k, alpha, hooks)
}

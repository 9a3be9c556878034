//! Self-orthogonal and LCD constructions.

use super::{arrange_points, layer_elements, EmitOptions};
use crate::codes::{GtrsSpec, LinearCode, TwistHook};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field, Subgroup};
use crate::linalg::Matrix;
use crate::verify::{gram, is_lcd, lcd_multitwist_predicate, mds_by_minors, multitwist_spec};

/// Largest top field accepted by [`lcd_subgroup_multitwist`] without an override.
pub const TOWER_LIMIT: u64 = 5_764_801; // 7^8

/// Maximal-minor checks are skipped above this many column subsets.
const MINOR_CHECK_LIMIT: u128 = 100_000;

/// `u_i = prod_{j != i} (alpha_i - alpha_j)^{-1}`, spanning the kernel of the
/// `(n-1) x n` Vandermonde matrix on `alpha`.
pub fn dual_kernel_vector(field: &Field, alpha: &[Fe]) -> Result<Vec<Fe>> {
    for (i, &a) in alpha.iter().enumerate() {
        if let Some(j) = alpha[..i].iter().position(|&b| b == a) {
            return Err(Error::RepeatedPoint(j, i));
        }
    }
    alpha
        .iter()
        .enumerate()
        .map(|(i, &ai)| {
            let prod = field.product(
                alpha
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &aj)| field.sub(ai, aj)),
            );
            field.inv(prod)
        })
        .collect()
}

/// Twist `(1, h, eta)` with multipliers `v_i = sqrt(u_i)`; self-orthogonal when
/// `1 <= k <= (n-2)/2`.
pub fn self_orthogonal_gtrs(
    field: &Field,
    alpha: &[Fe],
    k: usize,
    h: usize,
    eta: Fe,
) -> Result<GtrsSpec> {
    let n = alpha.len();
    if k == 0 || 2 * k + 2 > n {
        return Err(Error::Precondition(format!(
            "need 1 <= k <= (n-2)/2, got k = {k}, n = {n}"
        )));
    }
    if h >= k {
        return Err(Error::Precondition(format!("need h < k, got h = {h}")));
    }
    let u = dual_kernel_vector(field, alpha)?;
    let v = u
        .iter()
        .enumerate()
        .map(|(i, &ui)| field.sqrt(ui).ok_or(Error::NonSquareKernelEntry(i)))
        .collect::<Result<Vec<_>>>()?;
    let spec = GtrsSpec::new(
        field,
        k,
        alpha.iter().map(|&a| a.into()).collect(),
        Some(v),
        vec![TwistHook::new(1, h, eta)],
    )?;
    if !gram(&spec.generator_matrix()?).is_zero() {
        return Err(Error::PostconditionFailed("Gram matrix is not zero".into()));
    }
    Ok(spec)
}

fn check_beta(field: &Field, beta: Fe) -> Result<()> {
    if beta.is_zero() || beta == Fe::ONE || beta == field.neg(Fe::ONE) || !field.contains(beta) {
        return Err(Error::BadBeta);
    }
    Ok(())
}

/// `[A : B] -> [A : beta B]` with `A` the first `k` columns; turns a self-orthogonal MDS
/// code into an LCD MDS code.
pub fn lcd_beta_scale(code: &LinearCode, beta: Fe) -> Result<LinearCode> {
    let f = code.field();
    check_beta(f, beta)?;
    let g = code.generator();
    if !gram(code).is_zero() {
        return Err(Error::NotSelfOrthogonal);
    }
    if mds_by_minors(code).is_some() {
        return Err(Error::NotMds);
    }
    let k = code.k();
    let scaled = LinearCode::new(Matrix::from_fn(f, k, code.n(), |i, j| {
        if j < k {
            g[(i, j)]
        } else {
            f.mul(beta, g[(i, j)])
        }
    }))?;
    if is_lcd(&scaled).is_some() || mds_by_minors(&scaled).is_some() {
        return Err(Error::PostconditionFailed(
            "scaled code is not LCD MDS".into(),
        ));
    }
    Ok(scaled)
}

/// LCD MDS code over GF(2^m): points from a coset union `L` of size `2^(m-1)` (a subgroup of
/// `F_q / V`), twist `(1, k-1, eta)` with `eta^{-1}` outside `L`, multipliers
/// `v_i = sqrt(u_i)` and the last `n - k` of them scaled by `beta`.
pub fn lcd_mds_char2(
    field: &Field,
    v: &Subgroup,
    reps: &[Fe],
    k: usize,
    eta: Fe,
    beta: Fe,
    opts: EmitOptions,
) -> Result<(GtrsSpec, LinearCode)> {
    if field.characteristic() != 2 || field.degree() < 2 {
        return Err(Error::Precondition(
            "the field must be GF(2^m) with m >= 2".into(),
        ));
    }
    let sel = v.quotient_subgroup_union(field, reps, !opts.force)?;
    let half = (field.order() / 2) as usize;
    if !opts.force {
        if sel.union().len() != half {
            return Err(Error::NotAProperSubgroup);
        }
        let inv = field.inv(eta)?;
        if sel.contains(inv) {
            return Err(Error::EtaInForbiddenSet);
        }
        check_beta(field, beta)?;
    }
    let alpha: Vec<Fe> = arrange_points(sel.union(), &[], None, opts.length)?
        .into_iter()
        .filter_map(|a| a.finite())
        .collect();
    let u = dual_kernel_vector(field, &alpha)?;
    let vs: Vec<Fe> = u
        .iter()
        .enumerate()
        .map(|(i, &ui)| field.sqrt(ui).ok_or(Error::NonSquareKernelEntry(i)))
        .collect::<Result<_>>()?;
    let n = alpha.len();
    if k == 0 || 2 * k + 2 > n {
        return Err(Error::Precondition(format!(
            "need 1 <= k <= (n-2)/2, got k = {k}, n = {n}"
        )));
    }
    let scaled: Vec<Fe> = vs
        .iter()
        .enumerate()
        .map(|(i, &x)| if i < k { x } else { field.mul(beta, x) })
        .collect();
    let spec = GtrsSpec::new(
        field,
        k,
        alpha.iter().map(|&a| a.into()).collect(),
        Some(scaled),
        vec![TwistHook::new(1, k - 1, eta)],
    )?;
    let code = spec.generator_matrix()?;
    if !opts.force && (is_lcd(&code).is_some() || mds_by_minors(&code).is_some()) {
        return Err(Error::PostconditionFailed(
            "emitted code is not LCD MDS".into(),
        ));
    }
    Ok((spec, code))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MultitwistOptions {
    /// Accept top fields beyond [`TOWER_LIMIT`].
    pub allow_large_tower: bool,
}

/// LCD MDS multi-twist code with `t = (1..k)`, `h = (0..k-1)` on the order-`n` subgroup of
/// `GF(q0)^*`, over the top field `GF(q0^s_k)` of the chain `1 = s_0 < ... < s_k`.
///
/// Without `etas`, `eta_i` is the first element of layer `i` (with `1 + eta_1^2 != 0`).
pub fn lcd_subgroup_multitwist(
    q0: u64,
    chain: &[u64],
    n: usize,
    k: usize,
    etas: Option<&[Fe]>,
    opts: MultitwistOptions,
) -> Result<GtrsSpec> {
    let factors = crate::gf::prime_factors(q0);
    let [(p, e)] = factors.as_slice() else {
        return Err(Error::Precondition(format!("{q0} is not a prime power")));
    };
    if *p == 2 {
        return Err(Error::Precondition("q0 must be odd".into()));
    }
    if chain.len() != k + 1 || chain[0] != 1 {
        return Err(Error::BrokenChain(format!(
            "need a chain 1 = s_0 < ... < s_{k}"
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
    let case = crate::verify::GramCase::classify(n, k);
    use crate::verify::GramCase::*;
    if !matches!(case, Some(A | B | C | D | I)) || 2 * k > n {
        return Err(Error::CaseNotSatisfied {
            n,
            k,
            detail: "(n, k) matches no admissible case".into(),
        });
    }
    if n == 0 || !(q0 - 1).is_multiple_of(n as u64) {
        return Err(Error::Precondition(format!(
            "n = {n} does not divide q0 - 1 = {}",
            q0 - 1
        )));
    }
    let top = *chain.last().expect("chain is nonempty");
    let m = top as u32 * e;
    let q = p.checked_pow(m).ok_or(Error::TowerTooLarge(u64::MAX))?;
    if q > TOWER_LIMIT && !opts.allow_large_tower {
        return Err(Error::TowerTooLarge(q));
    }
    let field = Field::new(*p, m as usize, None)?;
    let etas: Vec<Fe> = match etas {
        Some(v) => {
            if v.len() != k {
                return Err(Error::InvalidSpec(format!(
                    "expected {k} twist coefficients, got {}",
                    v.len()
                )));
            }
            for (i, &x) in v.iter().enumerate() {
                let inside = field.in_subfield(x, chain[i + 1], q0)?;
                let below = field.in_subfield(x, chain[i], q0)?;
                if x.is_zero() || !inside || below {
                    return Err(Error::EtaInWrongLayer(i + 1));
                }
            }
            v.to_vec()
        }
        None => (0..k)
            .map(|i| {
                let mut layer = layer_elements(&field, q0, chain[i + 1], chain[i])?;
                let pick = if i == 0 {
                    layer.find(|&x| !field.add(Fe::ONE, field.mul(x, x)).is_zero())
                } else {
                    layer.next()
                };
                pick.ok_or_else(|| Error::EtaInWrongLayer(i + 1))
            })
            .collect::<Result<_>>()?,
    };
    if field.add(Fe::ONE, field.mul(etas[0], etas[0])).is_zero() {
        return Err(Error::CaseNotSatisfied {
            n,
            k,
            detail: "1 + eta_1^2 = 0".into(),
        });
    }
    let alpha = Subgroup::multiplicative(&field, n as u64)?
        .elements()
        .to_vec();
    let verdict = lcd_multitwist_predicate(&field, &alpha, &etas)?;
    if verdict.analytic != Some(true) {
        return Err(Error::CaseNotSatisfied {
            n,
            k,
            detail: format!("{:?} side condition fails", verdict.case),
        });
    }
    if !verdict.consistent() || !verdict.direct {
        return Err(Error::PostconditionFailed(format!(
            "Gram check failed: {verdict:?}"
        )));
    }
    let spec = multitwist_spec(&field, &alpha, &etas)?;
    if binomial(n, k) <= MINOR_CHECK_LIMIT && mds_by_minors(&spec.generator_matrix()?).is_some() {
        return Err(Error::PostconditionFailed("emitted code is not MDS".into()));
    }
    Ok(spec)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

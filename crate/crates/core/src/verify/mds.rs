//! MDS verdicts: maximal minors, exhaustive minimum distance, and the closed-form
//! subset conditions for the two single-hook families.

use itertools::Itertools;
use serde::Serialize;

use crate::codes::{EvalPoint, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Largest number of codewords enumerated by [`weight_distribution`].
pub const ENUMERATION_LIMIT: u64 = 1 << 24;

/// `None` when every `k x k` column submatrix is nonsingular, otherwise the first
/// singular column set in lexicographic order.
pub fn mds_by_minors(code: &LinearCode) -> Option<Vec<usize>> {
    code.generator().first_singular_maximal_minor()
}

/// Which code was enumerated to obtain a distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumeratedCode {
    Primal,
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    /// Minimum distance (`n + 1` for the zero code).
    pub d: usize,
    /// `d == n - k + 1`.
    pub mds: bool,
    /// `A_w` = number of codewords of weight `w`.
    pub weight_distribution: Vec<u128>,
    pub enumerated: EnumeratedCode,
}

/// Weight distribution by enumerating all codewords, one per projective point.
pub fn weight_distribution(code: &LinearCode) -> Result<Vec<u128>> {
    let f = code.field();
    let (n, k, q) = (code.n(), code.k(), f.order());
    let total = q.checked_pow(k as u32).filter(|&t| t <= ENUMERATION_LIMIT);
    if total.is_none() {
        return Err(Error::TooLarge { q, k });
    }
    let g = code.generator();
    // multiples[j][c] = c * g_j
    let multiples: Vec<Vec<Vec<Fe>>> = (0..k)
        .map(|j| {
            f.elements()
                .map(|c| g.row(j).iter().map(|&x| f.mul(c, x)).collect())
                .collect()
        })
        .collect();
    let mut dist = vec![0u128; n + 1];
    dist[0] = 1;
    let mut projective = vec![0u128; n + 1];
    let mut stack: Vec<Vec<Fe>> = vec![vec![Fe::ZERO; n]; k + 1];
    for lead in 0..k {
        stack[lead + 1] = g.row(lead).to_vec();
        enumerate_tail(f, &multiples, lead + 1, &mut stack, &mut projective);
    }
    for (w, c) in projective.into_iter().enumerate() {
        dist[w] += c * (q as u128 - 1);
    }
    Ok(dist)
}

fn enumerate_tail(
    f: &Field,
    multiples: &[Vec<Vec<Fe>>],
    depth: usize,
    stack: &mut [Vec<Fe>],
    counts: &mut [u128],
) {
    if depth == multiples.len() {
        let w = stack[depth].iter().filter(|x| !x.is_zero()).count();
        counts[w] += 1;
        return;
    }
    for c in 0..multiples[depth].len() {
        let (lo, hi) = stack.split_at_mut(depth + 1);
        for ((dst, &a), &b) in hi[0].iter_mut().zip(&lo[depth]).zip(&multiples[depth][c]) {
            *dst = f.add(a, b);
        }
        enumerate_tail(f, multiples, depth + 1, stack, counts);
    }
}

fn binomial(n: usize, r: usize) -> i128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Weight distribution of the dual via the MacWilliams identity.
pub fn macwilliams_transform(dist: &[u128], q: u64) -> Result<Vec<u128>> {
    let n = dist.len() - 1;
    let size: u128 = dist.iter().sum();
    let q = q as i128;
    let overflow = || Error::TooLarge { q: q as u64, k: n };
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc: i128 = 0;
        for (i, &a) in dist.iter().enumerate() {
            if a == 0 {
                continue;
            }
            // Krawtchouk polynomial K_j(i)
            let mut kr: i128 = 0;
            for s in 0..=j.min(i) {
                let term = binomial(i, s)
                    .checked_mul(binomial(n - i, j - s))
                    .and_then(|t| t.checked_mul((q - 1).checked_pow((j - s) as u32)?))
                    .ok_or_else(overflow)?;
                kr = if s % 2 == 0 {
                    kr.checked_add(term)
                } else {
                    kr.checked_sub(term)
                }
                .ok_or_else(overflow)?;
            }
            acc = acc
                .checked_add((a as i128).checked_mul(kr).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        let size = size as i128;
        if acc % size != 0 || acc < 0 {
            return Err(Error::OracleDisagreement {
                check: "macwilliams".into(),
                detail: format!("non-integral dual weight count at weight {j}"),
            });
        }
        out.push((acc / size) as u128);
    }
    Ok(out)
}

/// Exact minimum distance by enumeration of the code or of its dual, whichever is smaller,
/// transporting the dual distribution through the MacWilliams identity.
pub fn mds_by_distance(code: &LinearCode) -> Result<DistanceReport> {
    let (n, k, q) = (code.n(), code.k(), code.field().order());
    let (weight_distribution, enumerated) = if k <= n - k {
        (weight_distribution(code)?, EnumeratedCode::Primal)
    } else {
        let dual = weight_distribution(&code.dual()).map_err(|_| Error::TooLarge { q, k })?;
        (macwilliams_transform(&dual, q)?, EnumeratedCode::Dual)
    };
    let d = (1..=n)
        .find(|&w| weight_distribution[w] > 0)
        .unwrap_or(n + 1);
    Ok(DistanceReport {
        d,
        mds: d == n - k + 1,
        weight_distribution,
        enumerated,
    })
}

/// Condition for the `(t, h) = (1, 0)` family: MDS iff no `k`-subset `I` has
/// `eta * (-1)^k * prod_I alpha = 1`. Returns the first violating subset.
pub fn mds_star_condition(field: &Field, alpha: &[Fe], k: usize, eta: Fe) -> Option<Vec<usize>> {
    let sign = if k.is_multiple_of(2) {
        eta
    } else {
        field.neg(eta)
    };
    let target = field.inv(sign).ok()?;
    (0..alpha.len())
        .combinations(k)
        .find(|idx| field.product(idx.iter().map(|&i| alpha[i])) == target)
}

/// Condition for the `(t, h) = (1, k-1)` family: MDS iff no `k`-subset `I` of finite points
/// has `eta * sum_I alpha = -1`. Subsets through infinity never violate it.
pub fn mds_plus_condition(
    field: &Field,
    alpha: &[EvalPoint],
    k: usize,
    eta: Fe,
) -> Option<Vec<usize>> {
    let target = field.neg(field.inv(eta).ok()?);
    let finite: Vec<(usize, Fe)> = alpha
        .iter()
        .enumerate()
        .filter_map(|(i, a)| a.finite().map(|x| (i, x)))
        .collect();
    finite
        .iter()
        .combinations(k)
        .find(|sub| field.sum(sub.iter().map(|(_, x)| *x)) == target)
        .map(|sub| sub.iter().map(|(i, _)| *i).collect())
}

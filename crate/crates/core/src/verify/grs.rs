//! GRS-equivalence of an MDS code via the minors of the entrywise-inverted parity block.

use itertools::Itertools;
use serde::Serialize;

use crate::codes::{GtrsSpec, LinearCode, TwistHook};
use crate::error::{Error, Result};
use crate::gf::Fe;
use crate::linalg::{det_in_place, Matrix};

/// A minor of the inverted parity block that violates the GRS criterion.
/// Rows index the systematic positions, columns are code positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// `Ok(None)` when the code is GRS-equivalent, otherwise the failing minor.
///
/// With `[I : A]` the systematic generator and `B_ij = A_ij^{-1}`, the code is GRS iff every
/// 2x2 minor of `B` is nonzero and every 3x3 minor vanishes.
pub fn is_grs_equivalent(code: &LinearCode) -> Result<Option<MinorWitness>> {
    let g = code.generator();
    if !g.all_maximal_minors_nonzero() {
        return Err(Error::NotMds);
    }
    let f = code.field();
    let sys = g.systematic_form()?;
    let a = &sys.parity;
    let mut b = Matrix::zeros(f, a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            b[(i, j)] = f.inv(a[(i, j)])?;
        }
    }
    let position = |j: usize| sys.permutation[code.k() + j];
    let failing = |size: usize, want_zero: bool| -> Option<MinorWitness> {
        let mut buf = vec![Fe::ZERO; size * size];
        for rows in (0..b.rows()).combinations(size) {
            for cols in (0..b.cols()).combinations(size) {
                for (ri, &r) in rows.iter().enumerate() {
                    for (ci, &c) in cols.iter().enumerate() {
                        buf[ri * size + ci] = b[(r, c)];
                    }
                }
                if det_in_place(f, &mut buf, size).is_zero() != want_zero {
                    return Some(MinorWitness {
                        rows: rows.iter().map(|&r| sys.permutation[r]).collect(),
                        cols: cols.iter().map(|&c| position(c)).collect(),
                    });
                }
            }
        }
        None
    };
    Ok(failing(2, false).or_else(|| failing(3, true)))
}

/// Result of scanning twist coefficients for GRS-equivalent MDS codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EtaCount {
    /// Candidates giving an MDS code that is GRS-equivalent.
    pub equivalent: Vec<Fe>,
    /// Candidates giving an MDS code that is not GRS-equivalent.
    pub non_grs: Vec<Fe>,
    /// Candidates dropped because the code is not MDS.
    pub dropped_non_mds: Vec<Fe>,
}

impl EtaCount {
    pub fn count(&self) -> usize {
        self.equivalent.len()
    }
}

/// For each `eta` in `candidates`, builds the single-hook code `(t, h, eta)` on the points of `spec_base` and
/// counts the GRS-equivalent ones among the MDS ones. Requires `2 < k < n - 2`.
pub fn count_rs_equivalent_etas(
    spec_base: &GtrsSpec,
    t: usize,
    h: usize,
    candidates: &[Fe],
) -> Result<EtaCount> {
    let (n, k) = (spec_base.n(), spec_base.k());
    if !(2 < k && k + 2 < n) {
        return Err(Error::Precondition(format!(
            "need 2 < k < n - 2, got k = {k}, n = {n}"
        )));
    }
    let mut out = EtaCount {
        equivalent: vec![],
        non_grs: vec![],
        dropped_non_mds: vec![],
    };
    for &eta in candidates {
        let spec = spec_base.with_hooks(vec![TwistHook::new(t, h, eta)])?;
        let code = spec.generator_matrix()?;
        match is_grs_equivalent(&code) {
            Ok(None) => out.equivalent.push(eta),
            Ok(Some(_)) => out.non_grs.push(eta),
            Err(Error::NotMds) => out.dropped_non_mds.push(eta),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::EvalPoint;
    use crate::gf::Field;

    #[test]
    fn rs_codes_are_grs() {
        let f = Field::prime(11).unwrap();
        let alpha: Vec<Fe> = (1..=9).map(Fe).collect();
        for k in 1..9 {
            let code = GtrsSpec::trs(&f, k, &alpha, vec![])
                .unwrap()
                .generator_matrix()
                .unwrap();
            assert_eq!(is_grs_equivalent(&code).unwrap(), None, "k = {k}");
        }
    }

    #[test]
    fn rejects_non_mds() {
        let f = Field::prime(7).unwrap();
        let spec = GtrsSpec::trs(
            &f,
            2,
            &[Fe(1), Fe(2), Fe(3)],
            vec![TwistHook::new(1, 0, Fe(4))],
        )
        .unwrap();
        assert_eq!(
            is_grs_equivalent(&spec.generator_matrix().unwrap()),
            Err(Error::NotMds)
        );
    }

    #[test]
    fn gf11_has_non_grs_twists() {
        let f = Field::prime(11).unwrap();
        let alpha: Vec<EvalPoint> = (0..6).map(|x| EvalPoint::Finite(Fe(x))).collect();
        let base = GtrsSpec::new(&f, 3, alpha, None, vec![]).unwrap();
        let etas: Vec<Fe> = f.nonzero_elements().collect();
        let scan = count_rs_equivalent_etas(&base, 1, 0, &etas).unwrap();
        assert!(scan.count() <= 6);
        assert!(!scan.non_grs.is_empty());
        assert_eq!(
            scan.count() + scan.non_grs.len() + scan.dropped_non_mds.len(),
            10
        );
        assert!(count_rs_equivalent_etas(&base, 1, 0, &[]).unwrap().count() == 0);
    }
}

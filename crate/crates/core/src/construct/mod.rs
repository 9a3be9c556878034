//! Recipes that emit GTRS specs with a guaranteed property.
//!
//! Every recipe validates its hypotheses and refuses to emit otherwise, unless
//! [`EmitOptions::force`] is set. Point sets are ordered deterministically: the coset union in
//! ascending integer encoding, then any extension elements in the order given, then `0` or
//! infinity last. A requested shorter length keeps a prefix of that order.

mod lcd;
mod mds;

pub use lcd::{
    dual_kernel_vector, lcd_beta_scale, lcd_mds_char2, lcd_subgroup_multitwist,
    self_orthogonal_gtrs, MultitwistOptions, TOWER_LIMIT,
};
pub use mds::{
    default_hyperplane, mds_subfield_chain, plus_coset_mds, plus_oddchar_extended_mds,
    star_char2_extended_mds, star_coset_mds, Char2Extension,
};

use crate::codes::EvalPoint;
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmitOptions {
    /// Keep only the first `length` points.
    pub length: Option<usize>,
    /// Emit even when hypotheses fail.
    pub force: bool,
}

impl EmitOptions {
    pub fn with_length(length: usize) -> EmitOptions {
        EmitOptions {
            length: Some(length),
            force: false,
        }
    }
}

/// `union ++ extra ++ [tail]`, cut to the requested length.
pub(crate) fn arrange_points(
    union: &[Fe],
    extra: &[Fe],
    tail: Option<EvalPoint>,
    length: Option<usize>,
) -> Result<Vec<EvalPoint>> {
    let mut pts: Vec<EvalPoint> = union.iter().chain(extra).map(|&x| x.into()).collect();
    pts.extend(tail);
    if let Some(n) = length {
        if n > pts.len() {
            return Err(Error::InvalidSpec(format!(
                "requested length {n} exceeds the {} available points",
                pts.len()
            )));
        }
        pts.truncate(n);
    }
    Ok(pts)
}

pub(crate) fn check_dimension(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidSpec(format!(
            "need 1 <= k < n, got k = {k}, n = {n}"
        )));
    }
    Ok(())
}

/// Elements of `GF(q0^s)` that do not lie in `GF(q0^s_prev)`, in order of increasing
/// exponent of a generator of `GF(q0^s)^*`.
pub fn layer_elements(
    field: &Field,
    q0: u64,
    s: u64,
    s_prev: u64,
) -> Result<impl Iterator<Item = Fe> + '_> {
    let e = field.base_degree(q0)?;
    if s == 0 || !(field.degree() as u64 / e).is_multiple_of(s) {
        return Err(Error::NotASubfield { q0, d: s });
    }
    let sub_order = q0
        .checked_pow(s as u32)
        .ok_or(Error::NotASubfield { q0, d: s })?;
    let z = field.pow(
        field.primitive_element(),
        (field.order() - 1) / (sub_order - 1),
    );
    let mut x = Fe::ONE;
    Ok((0..sub_order - 1).filter_map(move |_| {
        let cur = x;
        x = field.mul(x, z);
        match field.in_subfield(cur, s_prev, q0) {
            Ok(false) => Some(cur),
            _ => None,
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangement_order() {
        let pts =
            arrange_points(&[Fe(1), Fe(3)], &[Fe(2)], Some(EvalPoint::Infinity), None).unwrap();
        assert_eq!(
            pts,
            vec![
                Fe(1).into(),
                Fe(3).into(),
                Fe(2).into(),
                EvalPoint::Infinity
            ]
        );
        let short = arrange_points(
            &[Fe(1), Fe(3)],
            &[Fe(2)],
            Some(EvalPoint::Infinity),
            Some(2),
        )
        .unwrap();
        assert_eq!(short.len(), 2);
        assert!(arrange_points(&[Fe(1)], &[], None, Some(3)).is_err());
    }

    #[test]
    fn layers_of_gf81() {
        let f = Field::new(3, 4, None).unwrap();
        let l1: Vec<Fe> = layer_elements(&f, 3, 2, 1).unwrap().collect();
        assert_eq!(l1.len(), 6);
        for &x in &l1 {
            assert!(f.in_subfield(x, 2, 3).unwrap());
            assert!(!f.in_subfield(x, 1, 3).unwrap());
        }
        assert_eq!(layer_elements(&f, 3, 4, 2).unwrap().count(), 72);
        assert!(layer_elements(&f, 3, 3, 1).is_err());
    }
}

//! Multiplicative and additive subgroups of a field and unions of their cosets.

use std::collections::BTreeSet;

use super::{Fe, Field};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// A subgroup of (F_q^*, ·).
    Multiplicative,
    /// A subgroup of (F_q, +).
    Additive,
}

/// A subgroup of the multiplicative or additive group of a field, stored as a sorted set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    kind: GroupKind,
    elements: Vec<Fe>,
}

impl Subgroup {
    /// The unique multiplicative subgroup of order `d`, generated by `g^((q-1)/d)` for the
    /// field's primitive element `g`.
    pub fn multiplicative(field: &Field, d: u64) -> Result<Subgroup> {
        let n = field.order() - 1;
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::NotADivisor { d, order: n });
        }
        let h = field.pow(field.primitive_element(), n / d);
        let mut elements = Vec::with_capacity(d as usize);
        let mut x = Fe::ONE;
        for _ in 0..d {
            elements.push(x);
            x = field.mul(x, h);
        }
        elements.sort_unstable();
        Ok(Subgroup {
            kind: GroupKind::Multiplicative,
            elements,
        })
    }

    /// The GF(p)-span of `basis`, an additive subgroup of order `p^|basis|`.
    pub fn additive(field: &Field, basis: &[Fe]) -> Result<Subgroup> {
        let p = field.characteristic();
        let mut span: BTreeSet<Fe> = BTreeSet::from([Fe::ZERO]);
        for &b in basis {
            if !field.contains(b) {
                return Err(Error::NotAnElement {
                    value: b.value(),
                    q: field.order(),
                });
            }
            let multiples: Vec<Fe> = (0..p)
                .map(|c| field.mul(field.from_int(c as i64), b))
                .collect();
            span = span
                .iter()
                .flat_map(|&x| multiples.iter().map(move |&cb| (x, cb)))
                .map(|(x, cb)| field.add(x, cb))
                .collect();
        }
        let expected = (p as u128).pow(basis.len() as u32);
        if span.len() as u128 != expected {
            return Err(Error::DependentBasis);
        }
        Ok(Subgroup {
            kind: GroupKind::Additive,
            elements: span.into_iter().collect(),
        })
    }

    /// `{1}` or `{0}`.
    pub fn trivial(kind: GroupKind) -> Subgroup {
        let e = match kind {
            GroupKind::Multiplicative => Fe::ONE,
            GroupKind::Additive => Fe::ZERO,
        };
        Subgroup {
            kind,
            elements: vec![e],
        }
    }

    /// Validates that `elements` form a subgroup of the given kind.
    pub fn from_elements(field: &Field, kind: GroupKind, elements: &[Fe]) -> Result<Subgroup> {
        let set: BTreeSet<Fe> = elements.iter().copied().collect();
        if set.len() != elements.len() || set.iter().any(|&x| !field.contains(x)) {
            return Err(Error::NotASubgroup);
        }
        let sg = Subgroup {
            kind,
            elements: set.into_iter().collect(),
        };
        if !sg.contains(sg.identity()) {
            return Err(Error::NotASubgroup);
        }
        if kind == GroupKind::Multiplicative && sg.contains(Fe::ZERO) {
            return Err(Error::NotASubgroup);
        }
        for &a in &sg.elements {
            for &b in &sg.elements {
                if !sg.contains(sg.op(field, a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(sg)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in ascending integer encoding.
    pub fn elements(&self) -> &[Fe] {
        &self.elements
    }

    pub fn contains(&self, x: Fe) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn identity(&self) -> Fe {
        match self.kind {
            GroupKind::Multiplicative => Fe::ONE,
            GroupKind::Additive => Fe::ZERO,
        }
    }

    fn op(&self, field: &Field, a: Fe, b: Fe) -> Fe {
        match self.kind {
            GroupKind::Multiplicative => field.mul(a, b),
            GroupKind::Additive => field.add(a, b),
        }
    }

    /// Order of the ambient group (q-1 or q).
    pub fn ambient_order(&self, field: &Field) -> u64 {
        match self.kind {
            GroupKind::Multiplicative => field.order() - 1,
            GroupKind::Additive => field.order(),
        }
    }

    /// The coset `x·H` (or `x + H`), sorted.
    pub fn coset(&self, field: &Field, x: Fe) -> Vec<Fe> {
        let mut c: Vec<Fe> = self
            .elements
            .iter()
            .map(|&h| self.op(field, x, h))
            .collect();
        c.sort_unstable();
        c
    }

    /// Smallest element of the coset of `x`; equal keys mean equal cosets.
    pub fn coset_key(&self, field: &Field, x: Fe) -> Fe {
        self.elements
            .iter()
            .map(|&h| self.op(field, x, h))
            .min()
            .expect("subgroups are nonempty")
    }

    /// Materializes `∪_j rep_j·H` (resp. `rep_j + H`).
    ///
    /// Representatives must lie in distinct cosets. Whether the chosen cosets form a
    /// subgroup of the quotient is always recorded; with `validate_closure` a non-subgroup
    /// is an error.
    pub fn quotient_subgroup_union(
        &self,
        field: &Field,
        reps: &[Fe],
        validate_closure: bool,
    ) -> Result<CosetSelection> {
        let mut keys = Vec::with_capacity(reps.len());
        for (i, &r) in reps.iter().enumerate() {
            if !field.contains(r) {
                return Err(Error::NotAnElement {
                    value: r.value(),
                    q: field.order(),
                });
            }
            if self.kind == GroupKind::Multiplicative && r.is_zero() {
                return Err(Error::BadCosetElement(
                    "0 has no multiplicative coset".into(),
                ));
            }
            let key = self.coset_key(field, r);
            if let Some(j) = keys.iter().position(|&k| k == key) {
                return Err(Error::RepeatedCoset(j, i));
            }
            keys.push(key);
        }
        let closed = !reps.is_empty()
            && reps.iter().all(|&a| {
                reps.iter()
                    .all(|&b| keys.contains(&self.coset_key(field, self.op(field, a, b))))
            });
        if validate_closure && !closed {
            return Err(Error::NotAQuotientSubgroup);
        }
        let mut union: Vec<Fe> = reps.iter().flat_map(|&r| self.coset(field, r)).collect();
        union.sort_unstable();
        Ok(CosetSelection {
            subgroup: self.clone(),
            representatives: reps.to_vec(),
            union,
            quotient_subgroup: closed,
        })
    }
}

/// A subgroup together with coset representatives and the union of their cosets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSelection {
    subgroup: Subgroup,
    representatives: Vec<Fe>,
    union: Vec<Fe>,
    quotient_subgroup: bool,
}

impl CosetSelection {
    pub fn kind(&self) -> GroupKind {
        self.subgroup.kind
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn representatives(&self) -> &[Fe] {
        &self.representatives
    }

    /// The coset union, ascending.
    pub fn union(&self) -> &[Fe] {
        &self.union
    }

    pub fn contains(&self, x: Fe) -> bool {
        self.union.binary_search(&x).is_ok()
    }

    /// Whether the selected cosets form a subgroup of the quotient group.
    pub fn is_quotient_subgroup(&self) -> bool {
        self.quotient_subgroup
    }

    /// A quotient subgroup that is not the whole quotient.
    pub fn is_proper_quotient_subgroup(&self, field: &Field) -> bool {
        self.quotient_subgroup && (self.union.len() as u64) < self.subgroup.ambient_order(field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(xs: &[Fe]) -> Vec<u64> {
        xs.iter().map(|x| x.value()).collect()
    }

    #[test]
    fn gf13_order3() {
        let f = Field::prime(13).unwrap();
        let g = Subgroup::multiplicative(&f, 3).unwrap();
        assert_eq!(vals(g.elements()), vec![1, 3, 9]);
        assert_eq!(
            vals(Subgroup::multiplicative(&f, 1).unwrap().elements()),
            vec![1]
        );
        assert_eq!(
            Subgroup::multiplicative(&f, 5).unwrap_err(),
            Error::NotADivisor { d: 5, order: 12 }
        );
    }

    #[test]
    fn gf13_quotient_union() {
        let f = Field::prime(13).unwrap();
        let g = Subgroup::multiplicative(&f, 3).unwrap();
        let sel = g
            .quotient_subgroup_union(&f, &[Fe(1), Fe(4)], true)
            .unwrap();
        assert_eq!(vals(sel.union()), vec![1, 3, 4, 9, 10, 12]);
        assert!(sel.is_proper_quotient_subgroup(&f));
        let single = g.quotient_subgroup_union(&f, &[Fe(1)], true).unwrap();
        assert_eq!(single.union(), g.elements());
        // 2G has order 4 in the quotient, {G, 2G} is not closed
        assert_eq!(
            g.quotient_subgroup_union(&f, &[Fe(1), Fe(2)], true)
                .unwrap_err(),
            Error::NotAQuotientSubgroup
        );
        assert!(!g
            .quotient_subgroup_union(&f, &[Fe(1), Fe(2)], false)
            .unwrap()
            .is_quotient_subgroup());
        assert_eq!(
            g.quotient_subgroup_union(&f, &[Fe(1), Fe(3)], false)
                .unwrap_err(),
            Error::RepeatedCoset(0, 1)
        );
    }

    #[test]
    fn gf49_additive() {
        let f = Field::new(7, 2, Some(&[2, 0, 1])).unwrap();
        let v = Subgroup::additive(&f, &[Fe::ONE]).unwrap();
        assert_eq!(vals(v.elements()), (0..7).collect::<Vec<_>>());
        assert_eq!(
            v.quotient_subgroup_union(&f, &[Fe(0), f.theta()], true)
                .unwrap_err(),
            Error::NotAQuotientSubgroup
        );
        assert_eq!(
            Subgroup::additive(&f, &[Fe(1), Fe(3)]).unwrap_err(),
            Error::DependentBasis
        );
        assert_eq!(
            vals(Subgroup::additive(&f, &[]).unwrap().elements()),
            vec![0]
        );
    }

    #[test]
    fn gf16_additive_span() {
        let f = Field::new(2, 4, None).unwrap();
        let v = Subgroup::additive(&f, &[Fe(1), f.theta()]).unwrap();
        // span of 1 and θ = digit vectors with zero top two digits
        assert_eq!(vals(v.elements()), vec![0, 1, 2, 3]);
        for &a in v.elements() {
            for &b in v.elements() {
                assert!(v.contains(f.add(a, b)));
            }
            assert!(v.contains(f.neg(a)));
        }
    }

    #[test]
    fn from_elements_checks_closure() {
        let f = Field::prime(7).unwrap();
        assert!(
            Subgroup::from_elements(&f, GroupKind::Multiplicative, &[Fe(1), Fe(2), Fe(4)]).is_ok()
        );
        assert_eq!(
            Subgroup::from_elements(&f, GroupKind::Multiplicative, &[Fe(1), Fe(3)]).unwrap_err(),
            Error::NotASubgroup
        );
    }
}

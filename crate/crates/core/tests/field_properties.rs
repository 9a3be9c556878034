use gtrs::gf::{prime_factors, GroupKind, Subgroup};
use gtrs::{Fe, Field};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![
        Field::prime(7).unwrap(),
        Field::new(3, 2, None).unwrap(),
        Field::new(2, 4, None).unwrap(),
        Field::new(7, 2, Some(&[2, 0, 1])).unwrap(),
        Field::new(5, 3, None).unwrap(),
        // beyond the table limit: polynomial arithmetic
        Field::new(7, 8, None).unwrap(),
        Field::new(2, 21, None).unwrap(),
    ]
}

fn elem(f: &Field, seed: u64) -> Fe {
    f.elem(seed % f.order()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(fi in 0usize..7, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = &fields()[fi];
        let (a, b, c) = (elem(f, a), elem(f, b), elem(f, c));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        prop_assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
    }

    #[test]
    fn inverses_and_powers(fi in 0usize..7, a in any::<u64>(), e1 in 0u64..1000, e2 in 0u64..1000) {
        let f = &fields()[fi];
        let a = elem(f, a);
        if a.is_zero() {
            prop_assert!(f.inv(a).is_err());
        } else {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
            prop_assert_eq!(f.pow(a, f.order() - 1), Fe::ONE);
            prop_assert_eq!(f.powi(a, -(e1 as i64)).unwrap(), f.inv(f.pow(a, e1)).unwrap());
        }
        prop_assert_eq!(f.mul(f.pow(a, e1), f.pow(a, e2)), f.pow(a, e1 + e2));
    }

    #[test]
    fn frobenius_is_additive(fi in 0usize..7, a in any::<u64>(), b in any::<u64>()) {
        let f = &fields()[fi];
        let (a, b) = (elem(f, a), elem(f, b));
        prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
    }

    #[test]
    fn square_roots(fi in 0usize..7, a in any::<u64>()) {
        let f = &fields()[fi];
        let a = elem(f, a);
        let sq = f.mul(a, a);
        let r = f.sqrt(sq).unwrap();
        prop_assert_eq!(f.mul(r, r), sq);
        prop_assert!(r == a || r == f.neg(a));
        prop_assert!(!f.cmp_digits(f.neg(r), r).is_lt());
        match f.sqrt(a) {
            Some(x) => prop_assert_eq!(f.mul(x, x), a),
            None => prop_assert!(!f.is_square(a)),
        }
    }
}

#[test]
fn square_counts() {
    for f in &fields()[..5] {
        let squares = f.elements().filter(|&a| f.is_square(a)).count() as u64;
        let expected = if f.characteristic() == 2 {
            f.order()
        } else {
            f.order().div_ceil(2)
        };
        assert_eq!(squares, expected, "GF({})", f.order());
        for a in f.elements() {
            assert_eq!(f.sqrt(a).is_some(), f.is_square(a));
        }
    }
}

#[test]
fn primitive_elements_generate() {
    for f in &fields()[..5] {
        let g = f.primitive_element();
        assert_eq!(f.mult_order(g).unwrap(), f.order() - 1);
        for r in prime_factors(f.order() - 1) {
            assert_ne!(f.pow(g, (f.order() - 1) / r.0), Fe::ONE);
        }
    }
}

#[test]
fn multiplicative_cosets_partition() {
    for f in &fields()[..5] {
        let n = f.order() - 1;
        for d in (1..=n).filter(|d| n % d == 0) {
            let g = Subgroup::multiplicative(f, d).unwrap();
            assert_eq!(g.order() as u64, d);
            let mut covered: Vec<Fe> = Vec::new();
            for x in f.nonzero_elements() {
                if g.coset_key(f, x) == x {
                    covered.extend(g.coset(f, x));
                }
            }
            covered.sort();
            assert_eq!(covered, f.nonzero_elements().collect::<Vec<_>>());
        }
    }
}

#[test]
fn additive_subgroups_and_quotients() {
    let f = Field::new(3, 3, None).unwrap();
    let theta = f.theta();
    let v = Subgroup::additive(&f, &[Fe::ONE]).unwrap();
    assert_eq!(v.order(), 3);
    let plane = Subgroup::additive(&f, &[Fe::ONE, theta]).unwrap();
    let reps: Vec<Fe> = (0..3).map(|i| f.mul(f.from_int(i), theta)).collect();
    let sel = v.quotient_subgroup_union(&f, &reps, true).unwrap();
    assert_eq!(sel.union(), plane.elements());
    assert!(sel.is_proper_quotient_subgroup(&f));
    assert!(v.quotient_subgroup_union(&f, &[theta], true).is_err());
    assert!(Subgroup::from_elements(&f, GroupKind::Additive, plane.elements()).is_ok());
    assert!(Subgroup::additive(&f, &[Fe::ONE, f.from_int(2)]).is_err());
}

#[test]
fn spec_strings_round_trip() {
    for f in fields() {
        let s = f.spec_string();
        let g = Field::parse(&s).unwrap();
        assert_eq!(g, f);
        assert_eq!(g.modulus(), f.modulus());
    }
    assert_eq!(Field::parse("13").unwrap().order(), 13);
    assert_eq!(Field::parse("7^2:2,0,1").unwrap().modulus(), &[2, 0, 1]);
    assert!(Field::parse("7^2:1,0,0").is_err());
    assert!(Field::parse("6").is_err());
    assert_eq!(Field::parse("49").unwrap(), Field::new(7, 2, None).unwrap());
}

#[test]
fn subfield_membership_counts() {
    let f = Field::new(3, 4, None).unwrap();
    for (d, size) in [(1, 3), (2, 9), (4, 81)] {
        let count = f
            .elements()
            .filter(|&a| f.in_subfield(a, d, 3).unwrap())
            .count();
        assert_eq!(count, size);
    }
    assert_eq!(
        f.elements()
            .filter(|&a| f.in_subfield(a, 1, 9).unwrap())
            .count(),
        9
    );
    assert!(f.in_subfield(Fe::ONE, 3, 3).is_err());
}

use gtrs::verify::{
    gram, is_grs_equivalent, is_lcd, is_self_orthogonal, lcd_by_dual, mds_by_distance,
    mds_by_minors, mds_plus_condition, mds_star_condition, power_sum, power_sum_closed_form,
    run_checks, self_orthogonal_by_dual, Check, CodeReport, OracleMode,
};
use gtrs::{Error, EvalPoint, Fe, Field, GtrsSpec, LinearCode, Matrix, TwistHook};
use itertools::Itertools;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fe(f: &Field, xs: &[u64]) -> Vec<Fe> {
    xs.iter().map(|&x| f.elem(x).unwrap()).collect()
}

/// Dimension of the span of all coordinatewise products of generator rows.
fn schur_square_dimension(code: &LinearCode) -> usize {
    let f = code.field();
    let g = code.generator();
    let rows: Vec<Vec<Fe>> = (0..code.k())
        .tuple_combinations::<(_, _)>()
        .chain((0..code.k()).map(|i| (i, i)))
        .map(|(i, j)| {
            g.row(i)
                .iter()
                .zip(g.row(j))
                .map(|(&a, &b)| f.mul(a, b))
                .collect()
        })
        .collect();
    Matrix::from_rows(f, rows).unwrap().rank()
}

fn single_hook_code(f: &Field, alpha: &[Fe], k: usize, h: usize, eta: Fe) -> LinearCode {
    GtrsSpec::trs(f, k, alpha, vec![TwistHook::new(1, h, eta)])
        .unwrap()
        .generator_matrix()
        .unwrap()
}

/// GRS codes have Schur square of dimension `min(n, 2k-1)`; a larger square rules GRS out.
#[test]
fn grs_verdict_agrees_with_schur_square() {
    let mut seen = (0, 0);
    for (q, n) in [(11u64, 7usize), (13, 8), (16, 8), (17, 8), (19, 9)] {
        let f = Field::new(
            gtrs::gf::prime_factors(q)[0].0,
            gtrs::gf::prime_factors(q)[0].1 as usize,
            None,
        )
        .unwrap();
        let alpha: Vec<Fe> = f.elements().take(n).collect();
        for k in 3..n - 2 {
            for eta in f.nonzero_elements() {
                for h in [0, k - 1] {
                    let code = single_hook_code(&f, &alpha, k, h, eta);
                    let grs = match is_grs_equivalent(&code) {
                        Ok(w) => w.is_none(),
                        Err(Error::NotMds) => continue,
                        Err(e) => panic!("{e}"),
                    };
                    let dim = schur_square_dimension(&code);
                    if grs {
                        assert_eq!(dim, n.min(2 * k - 1), "GF({q}) k={k} eta={eta}");
                        seen.0 += 1;
                    }
                    if dim > 2 * k - 1 {
                        assert!(!grs);
                        seen.1 += 1;
                    }
                }
            }
            let rs = GtrsSpec::trs(&f, k, &alpha, vec![])
                .unwrap()
                .generator_matrix()
                .unwrap();
            assert_eq!(is_grs_equivalent(&rs), Ok(None));
            assert_eq!(schur_square_dimension(&rs), n.min(2 * k - 1));
        }
    }
    assert!(seen.1 > 0, "no non-GRS twist certified by the Schur square");
}

#[test]
fn single_hook_conditions_match_minors_with_infinity() {
    for q in [5u64, 7, 11] {
        let f = Field::prime(q).unwrap();
        for n in 3..=q.min(7) as usize {
            let finite: Vec<Fe> = f.elements().skip(1).take(n - 1).collect();
            let mut pts: Vec<EvalPoint> = finite.iter().map(|&x| x.into()).collect();
            pts.push(EvalPoint::Infinity);
            for k in 1..n {
                for eta in f.nonzero_elements() {
                    let spec = GtrsSpec::new(
                        &f,
                        k,
                        pts.clone(),
                        None,
                        vec![TwistHook::new(1, k - 1, eta)],
                    )
                    .unwrap();
                    let code = spec.generator_matrix().unwrap();
                    let fast = mds_plus_condition(&f, &pts, k, eta);
                    assert_eq!(fast.is_none(), mds_by_minors(&code).is_none());
                    if let Some(sub) = fast {
                        // the subset condition and the zero minor name the same kind of set
                        assert!(sub.iter().all(|&i| i < n - 1));
                        let s = f.sum(sub.iter().map(|&i| finite[i]));
                        assert_eq!(f.mul(eta, s), f.neg(Fe::ONE));
                    }
                }
            }
        }
    }
}

#[test]
fn star_condition_witness_is_a_zero_minor() {
    let f = Field::prime(7).unwrap();
    let alpha = fe(&f, &[1, 2, 3]);
    let sub = mds_star_condition(&f, &alpha, 2, Fe::ONE).map(|_| ());
    assert_eq!(sub, None);
    let w = mds_star_condition(&f, &alpha, 2, f.elem(4).unwrap()).unwrap();
    assert_eq!(w, vec![0, 1]);
    let code = single_hook_code(&f, &alpha, 2, 0, f.elem(4).unwrap());
    assert_eq!(mds_by_minors(&code), Some(vec![0, 1]));
    let d = mds_by_distance(&code).unwrap();
    assert!(!d.mds);
    assert_eq!(d.d, 1);
    // η = 6 on (0, 1, 2): 6·(0 + 1) = -1
    let alpha = fe(&f, &[0, 1, 2]);
    let pts: Vec<EvalPoint> = alpha.iter().map(|&x| x.into()).collect();
    assert_eq!(
        mds_plus_condition(&f, &pts, 2, f.elem(6).unwrap()),
        Some(vec![0, 1])
    );
}

fn random_code(f: &Field, rng: &mut ChaCha8Rng) -> LinearCode {
    let n = rng.gen_range(2..=8usize);
    let k = rng.gen_range(1..n);
    loop {
        let g = Matrix::from_fn(f, k, n, |_, _| f.elem(rng.gen_range(0..f.order())).unwrap());
        if let Ok(c) = LinearCode::new(g) {
            return c;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn duality_checks_agree(q in prop::sample::select(vec![2u64, 3, 5, 7]), seed in any::<u64>()) {
        let f = Field::prime(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_code(&f, &mut rng);
        prop_assert_eq!(is_self_orthogonal(&code).is_none(), self_orthogonal_by_dual(&code));
        prop_assert_eq!(is_lcd(&code).is_none(), lcd_by_dual(&code));
    }

    #[test]
    fn grs_verdict_invariant_under_monomial_maps(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = Field::prime(13).unwrap();
        let alpha: Vec<Fe> = f.elements().take(8).collect();
        let eta = f.elem(rng.gen_range(1..13)).unwrap();
        let code = single_hook_code(&f, &alpha, 3, 2, eta);
        let before = is_grs_equivalent(&code).map(|w| w.is_none());
        let mut perm: Vec<usize> = (0..8).collect();
        perm.shuffle(&mut rng);
        let v: Vec<Fe> = (0..8).map(|_| f.elem(rng.gen_range(1..13)).unwrap()).collect();
        let image = code.apply_equivalence(&perm, &v).unwrap();
        prop_assert_eq!(is_grs_equivalent(&image).map(|w| w.is_none()), before);
    }

    #[test]
    fn reports_are_consistent_and_witnesses_recheck(
        q in prop::sample::select(vec![7u64, 11, 13]),
        seed in any::<u64>(),
    ) {
        let f = Field::prime(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(4..=7usize);
        let k = rng.gen_range(1..n);
        let mut pts: Vec<Fe> = f.elements().collect();
        pts.shuffle(&mut rng);
        let eta = f.elem(rng.gen_range(1..q)).unwrap();
        let h = if rng.gen_bool(0.5) { 0 } else { k - 1 };
        let spec = GtrsSpec::trs(&f, k, &pts[..n], vec![TwistHook::new(1, h, eta)]).unwrap();
        let report = run_checks(&spec, &Check::ALL, OracleMode::Both).unwrap();
        let code = spec.generator_matrix().unwrap();
        for check in Check::ALL {
            let verdict = report.verdict(check).unwrap();
            if verdict.value() == Some(false) {
                let w = verdict.witness.as_ref().expect("false verdicts carry a witness");
                prop_assert!(w.recheck(&code), "{:?}", w);
            }
            if verdict.value().is_some() {
                prop_assert!(!verdict.oracle.is_empty());
            }
        }
        let back: CodeReport = serde_json::from_str(&report.to_json()).unwrap();
        prop_assert_eq!(back, report);
    }
}

#[test]
fn power_sums_over_all_subgroups() {
    for (p, m) in [(3u64, 3usize), (2, 6), (11, 2)] {
        let f = Field::new(p, m, None).unwrap();
        let order = f.order() - 1;
        for d in (1..=order).filter(|d| order.is_multiple_of(*d)) {
            let g = gtrs::gf::Subgroup::multiplicative(&f, d).unwrap();
            for t in 0..2 * d {
                assert_eq!(
                    power_sum(&f, &g, t).unwrap(),
                    power_sum_closed_form(&f, d, t)
                );
            }
        }
    }
}

#[test]
fn gram_examples() {
    let f2 = Field::prime(2).unwrap();
    let self_dual =
        LinearCode::new(Matrix::from_u64(&f2, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]).unwrap()).unwrap();
    assert!(gram(&self_dual).is_zero());
    assert!(is_lcd(&self_dual).is_some());
    let id = LinearCode::new(Matrix::identity(&f2, 3)).unwrap();
    assert_eq!(gram(&id), Matrix::identity(&f2, 3));
    assert!(is_lcd(&id).is_none());
}

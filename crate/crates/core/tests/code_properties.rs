use gtrs::codes::SpecDocument;
use gtrs::verify::{mds_by_distance, weight_distribution};
use gtrs::{EvalPoint, Fe, Field, GtrsSpec, LinearCode, Matrix, TwistHook};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(f: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_fn(f, rows, cols, |_, _| {
        f.elem(rng.gen_range(0..f.order())).unwrap()
    })
}

/// A random valid spec: distinct points (possibly with ∞), random multipliers and hooks.
fn random_spec(f: &Field, rng: &mut ChaCha8Rng) -> GtrsSpec {
    let q = f.order() as usize;
    let n = rng.gen_range(2..=q.min(9));
    let k = rng.gen_range(1..n);
    let mut pts: Vec<Fe> = f.elements().collect();
    pts.shuffle(rng);
    let mut alpha: Vec<EvalPoint> = pts[..n].iter().map(|&x| x.into()).collect();
    let v: Vec<Fe> = (0..n)
        .map(|_| f.elem(rng.gen_range(1..f.order())).unwrap())
        .collect();
    let eta = |rng: &mut ChaCha8Rng| f.elem(rng.gen_range(1..f.order())).unwrap();
    let hooks = match rng.gen_range(0..3) {
        0 => vec![],
        1 => {
            if rng.gen_bool(0.5) {
                alpha[n - 1] = EvalPoint::Infinity;
            }
            vec![TwistHook::new(1, k - 1, eta(rng))]
        }
        _ => {
            let l = rng.gen_range(1..=k.min(n - k));
            let mut hs: Vec<usize> = (0..k).collect();
            hs.shuffle(rng);
            let mut ts: Vec<usize> = (1..=n - k).collect();
            ts.shuffle(rng);
            (0..l)
                .map(|j| TwistHook::new(ts[j], hs[j], eta(rng)))
                .collect()
        }
    };
    GtrsSpec::new(f, k, alpha, Some(v), hooks).unwrap()
}

fn fields() -> Vec<Field> {
    vec![
        Field::prime(5).unwrap(),
        Field::prime(7).unwrap(),
        Field::new(2, 3, None).unwrap(),
        Field::new(3, 2, None).unwrap(),
        Field::prime(11).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn rank_nullity_and_kernel(fi in 0usize..5, rows in 1usize..6, cols in 1usize..8, seed in any::<u64>()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(f, rows, cols, &mut rng);
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.rows(), cols);
        prop_assert!(m.matmul(&ker.transpose()).unwrap().is_zero());
        prop_assert_eq!(ker.rank(), ker.rows());
    }

    #[test]
    fn determinant_is_multiplicative(fi in 0usize..5, n in 1usize..6, seed in any::<u64>()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(f, n, n, &mut rng);
        let b = random_matrix(f, n, n, &mut rng);
        let ab = a.matmul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), f.mul(a.det().unwrap(), b.det().unwrap()));
        prop_assert_eq!(a.det().unwrap().is_zero(), a.rank() < n);
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }

    #[test]
    fn systematic_form_spans_the_same_space(fi in 0usize..5, k in 1usize..5, extra in 0usize..4, seed in any::<u64>()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_matrix(f, k, k + extra, &mut rng);
        prop_assume!(g.rank() == k);
        let sys = g.systematic_form().unwrap();
        // undo the column permutation of [I : P]
        let ip = Matrix::identity(f, k).hstack(&sys.parity).unwrap();
        let mut back = Matrix::zeros(f, k, k + extra);
        for (pos, &col) in sys.permutation.iter().enumerate() {
            for r in 0..k {
                back[(r, col)] = ip[(r, pos)];
            }
        }
        prop_assert_eq!(back.rref().matrix, g.rref().matrix);
    }

    #[test]
    fn minors_agree_with_distance(fi in 0usize..5, k in 1usize..4, extra in 1usize..5, seed in any::<u64>()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_matrix(f, k, k + extra, &mut rng);
        prop_assume!(g.rank() == k);
        let code = LinearCode::new(g.clone()).unwrap();
        prop_assert_eq!(g.all_maximal_minors_nonzero(), mds_by_distance(&code).unwrap().mds);
    }

    #[test]
    fn encoding_matches_evaluation(fi in 0usize..5, seed in any::<u64>()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_spec(f, &mut rng);
        let code = spec.generator_matrix().unwrap();
        for _ in 0..10 {
            let msg: Vec<Fe> = (0..spec.k()).map(|_| f.elem(rng.gen_range(0..f.order())).unwrap()).collect();
            prop_assert_eq!(code.encode(&msg).unwrap(), spec.evaluate_message(&msg).unwrap());
        }
    }

    #[test]
    fn dual_is_orthogonal_complement(fi in 0usize..5, seed in any::<u64>()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_spec(f, &mut rng).generator_matrix().unwrap();
        let dual = code.dual();
        prop_assert_eq!(dual.k() + code.k(), code.n());
        prop_assert!(code.generator().matmul(&dual.generator().transpose()).unwrap().is_zero());
        prop_assert_eq!(dual.dual().generator().rref().matrix, code.generator().rref().matrix);
    }

    #[test]
    fn monomial_maps_preserve_weights(fi in 0usize..5, seed in any::<u64>()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_spec(f, &mut rng).generator_matrix().unwrap();
        prop_assume!(f.order().pow(code.k() as u32) <= 1 << 12);
        let mut perm: Vec<usize> = (0..code.n()).collect();
        perm.shuffle(&mut rng);
        let v: Vec<Fe> = (0..code.n()).map(|_| f.elem(rng.gen_range(1..f.order())).unwrap()).collect();
        let image = code.apply_equivalence(&perm, &v).unwrap();
        prop_assert_eq!(weight_distribution(&image).unwrap(), weight_distribution(&code).unwrap());
    }

    #[test]
    fn spec_documents_round_trip(fi in 0usize..5, seed in any::<u64>()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_spec(f, &mut rng);
        let json = spec.to_json();
        let back = GtrsSpec::from_json(&json).unwrap();
        prop_assert_eq!(&back, &spec);
        let doc: SpecDocument = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(doc.n, spec.n());
    }
}

/// For the `(1, k-1)` family, `f(∞) = 0` exactly when the expanded polynomial has degree at most `k - 2`.
#[test]
fn infinity_vanishes_iff_low_degree() {
    for (q, k) in [(5u64, 2usize), (5, 3), (7, 3), (7, 4), (3, 5)] {
        let f = Field::prime(q).unwrap();
        let eta = f.from_int(2);
        let total = q.pow(k as u32);
        for idx in 0..total {
            let mut x = idx;
            let msg: Vec<Fe> = (0..k)
                .map(|_| {
                    let d = x % q;
                    x /= q;
                    f.elem(d).unwrap()
                })
                .collect();
            let tp =
                gtrs::TwistedPolynomial::new(k, msg, vec![TwistHook::new(1, k - 1, eta)]).unwrap();
            let coeffs = tp.expand(&f);
            let degree = coeffs.iter().rposition(|c| !c.is_zero());
            let at_inf = tp.evaluate(&f, EvalPoint::Infinity).unwrap();
            let low = degree.is_none_or(|d| d + 2 <= k);
            assert_eq!(at_inf.is_zero(), low, "q={q} k={k} message index {idx}");
        }
    }
}

#[test]
fn twisted_generator_matches_displayed_form() {
    let f = Field::prime(7).unwrap();
    let alpha: Vec<Fe> = (1..4).map(|x| f.elem(x).unwrap()).collect();
    for eta in f.nonzero_elements() {
        let spec = GtrsSpec::trs(&f, 2, &alpha, vec![TwistHook::new(1, 0, eta)]).unwrap();
        let g = spec.generator_matrix().unwrap();
        for (j, &a) in alpha.iter().enumerate() {
            assert_eq!(
                g.generator()[(0, j)],
                f.add(Fe::ONE, f.mul(eta, f.mul(a, a)))
            );
            assert_eq!(g.generator()[(1, j)], a);
        }
    }
}

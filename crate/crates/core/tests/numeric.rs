use magnus_forest::dendriform::TreeSeries;
use magnus_forest::forest::RootedTree;
use magnus_forest::linalg::{matrix_exp, FloatMatrix};
use magnus_forest::numeric::*;
use magnus_forest::path::*;
use magnus_forest::perm::{mps_coefficient, Permutation};
use magnus_forest::rational::{factorial, int, rat, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn poly_strategy(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..=4, 1i64..=3), 0..=max_degree + 1)
        .prop_map(|cs| Poly::new(cs.into_iter().map(|(p, q)| rat(p, q)).collect()))
}

fn path_strategy(dim: usize, max_degree: usize) -> impl Strategy<Value = MatPolyPath> {
    prop::collection::vec(poly_strategy(max_degree), dim * dim).prop_map(move |entries| {
        MatPolyPath::from_rows(entries.chunks(dim).map(<[Poly]>::to_vec).collect()).unwrap()
    })
}

fn sized_path(max_degree: usize) -> impl Strategy<Value = MatPolyPath> {
    (1usize..=3).prop_flat_map(move |d| path_strategy(d, max_degree))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rota_baxter_weight_zero(
        (f, g) in sized_path(3).prop_flat_map(|f| {
            let d = f.dim();
            (Just(f), path_strategy(d, 3))
        })
    ) {
        let lhs = f.integral().mul(&g.integral()).unwrap();
        let rhs = f.integral().mul(&g).unwrap().add(&f.mul(&g.integral()).unwrap()).unwrap().integral();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dendriform_axioms_on_paths(
        x in path_strategy(2, 2), y in path_strategy(2, 2), z in path_strategy(2, 2)
    ) {
        let rb = WeightedRBAdapter::integral();
        let a1 = rb.prec(&rb.prec(&x, &y).unwrap(), &z).unwrap();
        let b1 = rb.prec(&x, &rb.star(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(a1, b1);
        let a2 = rb.prec(&rb.succ(&x, &y).unwrap(), &z).unwrap();
        let b2 = rb.succ(&x, &rb.prec(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(a2, b2);
        let a3 = rb.succ(&rb.star(&x, &y).unwrap(), &z).unwrap();
        let b3 = rb.succ(&x, &rb.succ(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(a3, b3);
    }

    #[test]
    fn path_json_round_trip(a in sized_path(3)) {
        prop_assert_eq!(MatPolyPath::from_json(&a.to_json()).unwrap(), a);
    }
}

#[test]
fn tree_evaluation_is_a_dendriform_morphism() {
    let rb = WeightedRBAdapter::integral();
    let a = default_path();
    let trunc = 5;
    for n in 1..trunc {
        for m in 1..=trunc - n {
            for s in RootedTree::enumerate(n) {
                for t in RootedTree::enumerate(m) {
                    let (es, et) = (
                        eval_tree_path(&s, &a).unwrap(),
                        eval_tree_path(&t, &a).unwrap(),
                    );
                    let ss = TreeSeries::from_tree(s.clone(), trunc);
                    let ts = TreeSeries::from_tree(t.clone(), trunc);
                    let star = rb.eval_series(&ss.star(&ts).unwrap(), &a).unwrap();
                    assert_eq!(star, rb.star(&es, &et).unwrap(), "{s} ⋆ {t}");
                    let prec = rb.eval_series(&ss.prec(&ts).unwrap(), &a).unwrap();
                    assert_eq!(prec, rb.prec(&es, &et).unwrap(), "{s} ≺ {t}");
                    let succ = rb.eval_series(&ss.succ(&ts).unwrap(), &a).unwrap();
                    assert_eq!(succ, rb.succ(&es, &et).unwrap(), "{s} ≻ {t}");
                }
            }
        }
    }
}

#[test]
fn triple_route_agreement() {
    let a = default_path();
    let mps = mps_omega_parts(&a, 4, true).unwrap();
    let closed = closed_tree_omega_parts(&a, 4).unwrap();
    let prelie = prelie_omega_parts(&a, 4).unwrap();
    for n in 0..4 {
        assert_eq!(mps[n], closed[n], "degree {}", n + 1);
        assert_eq!(mps[n], prelie[n], "degree {}", n + 1);
    }
    let s = rat(1, 4);
    assert_eq!(
        mps_omega(&a, 4, &s).unwrap(),
        closed_tree_omega(&a, 4, &s).unwrap()
    );
    assert_eq!(
        mps_omega(&a, 4, &s).unwrap(),
        prelie_omega_numeric(&a, 4, &s).unwrap()
    );
}

#[test]
fn evaluation_convention_pins_tree_route() {
    let a = default_path();
    let s = rat(1, 8);
    assert_eq!(
        closed_tree_omega(&a, 3, &s).unwrap(),
        mps_omega(&a, 3, &s).unwrap(),
        "tree route disagrees at N = 3; check E(t₁↘t₂) = (E(t₁)≻a)≺E(t₂) against the mirrored E(t₂)≻(a≺E(t₁))"
    );
}

#[test]
fn low_degree_examples() {
    let a = default_path();
    let ra = a.integral();
    let s = rat(1, 4);
    assert_eq!(closed_tree_omega(&a, 1, &s).unwrap(), ra.eval(&s));
    let n2 = a
        .mul(&ra)
        .unwrap()
        .sub(&ra.mul(&a).unwrap())
        .unwrap()
        .integral()
        .scale(&rat(1, 2));
    assert_eq!(
        closed_tree_omega(&a, 2, &s).unwrap(),
        ra.add(&n2).unwrap().eval(&s)
    );
    assert_eq!(
        mps_omega_parts(&a, 2, false).unwrap()[1],
        classical_degree2(&a).unwrap()
    );
    assert_eq!(
        prelie_omega_parts(&a, 2).unwrap()[1],
        classical_degree2(&a).unwrap()
    );
}

#[test]
fn classical_fixtures() {
    let a = default_path();
    let parts = mps_omega_parts(&a, 3, false).unwrap();
    assert_eq!(parts[1], classical_degree2(&a).unwrap());
    assert_eq!(parts[2], classical_degree3(&a).unwrap());
}

#[test]
fn commuting_collapse() {
    let a = MatPolyPath::scalar(Poly::new(vec![int(1), rat(-1, 2), int(3)]));
    for s in [rat(1, 4), rat(2, 3)] {
        for order in 1..=5 {
            let expect = a.integral().eval(&s);
            assert_eq!(mps_omega(&a, order, &s).unwrap(), expect);
            assert_eq!(closed_tree_omega(&a, order, &s).unwrap(), expect);
            assert_eq!(prelie_omega_numeric(&a, order, &s).unwrap(), expect);
        }
    }
    for n in 2..=5 {
        let total: Rational = Permutation::all(n).iter().map(mps_coefficient).sum();
        assert!(total.is_zero(), "n = {n}");
    }
}

#[test]
fn unit_path_gives_s() {
    let a = MatPolyPath::scalar(Poly::constant(int(1)));
    let s = rat(3, 7);
    for order in 1..=4 {
        assert_eq!(mps_omega(&a, order, &s).unwrap().get(0, 0), &s);
    }
}

#[test]
fn chen_examples() {
    let one = MatPolyPath::scalar(Poly::constant(int(1)));
    let s = rat(1, 3);
    for levels in 1..=6 {
        let mut expect = Rational::zero();
        for k in 0..=levels {
            expect += num_traits::pow(s.clone(), k) / Rational::from_integer(factorial(k));
        }
        assert_eq!(chen_reference(&one, levels, &s).unwrap().get(0, 0), &expect);
    }
    let c = ExactMatrix::from_rows(vec![vec![int(0), int(2)], vec![int(-1), int(1)]]).unwrap();
    let cp = MatPolyPath::constant(&c);
    let mut expect = ExactMatrix::identity(2);
    let mut power = ExactMatrix::identity(2);
    for k in 1..=4 {
        power = power.mul(&c).unwrap();
        let w = num_traits::pow(s.clone(), k) / Rational::from_integer(factorial(k));
        expect = expect.add(&power.scale(&w)).unwrap();
    }
    assert_eq!(chen_reference(&cp, 4, &s).unwrap(), expect);

    // Z′ − aZ only has terms of degree ≥ M.
    let a = default_path();
    let m = 5;
    let z = chen_reference_path(&a, m).unwrap();
    let defect = z.derivative().sub(&a.mul(&z).unwrap()).unwrap();
    assert!(defect.valuation().is_none_or(|v| v >= m));
}

#[test]
fn perm_integrals_of_scalar_paths() {
    let a = MatPolyPath::scalar(Poly::new(vec![int(1), int(1)]));
    let s = rat(1, 2);
    let ra = a.integral().eval(&s);
    for n in 1..=4 {
        let mut expect = ExactMatrix::identity(1);
        for _ in 0..n {
            expect = expect.mul(&ra).unwrap();
        }
        let expect = expect.scale(&Rational::new(1.into(), factorial(n)));
        for sigma in Permutation::all(n) {
            assert_eq!(eval_perm_integral(&sigma, &a, &s).unwrap(), expect);
        }
    }
}

#[test]
fn dsw_examples() {
    let s = rat(1, 4);
    let scalar = MatPolyPath::scalar(Poly::new(vec![int(2), int(1)]));
    let (x, y) = dsw_check(&scalar, 2, &s).unwrap();
    assert!(x.is_zero() && y.is_zero());
    let a = default_path();
    let (x, y) = dsw_check(&a, 2, &s).unwrap();
    let expect = classical_degree2(&a).unwrap().eval(&s);
    assert_eq!(x, expect);
    assert_eq!(y, expect);
    for n in 3..=4 {
        let (x, y) = dsw_check(&a, n, &s).unwrap();
        assert_eq!(x, y, "n = {n}");
    }
    let lin = MatPolyPath::from_rows(vec![
        vec![
            Poly::new(vec![rat(1, 2), int(-2)]),
            Poly::new(vec![int(3), int(1)]),
        ],
        vec![
            Poly::new(vec![int(0), rat(5, 3)]),
            Poly::new(vec![int(-1), int(1)]),
        ],
    ])
    .unwrap();
    for n in 2..=4 {
        let (x, y) = dsw_check(&lin, n, &rat(2, 5)).unwrap();
        assert_eq!(x, y, "n = {n}");
    }
    assert!(dsw_check(&a, 1, &s).is_err());
    assert!(dsw_check(&a, 6, &s).is_err());
}

#[test]
fn spitzer_order_scan() {
    let a = default_path();
    for order in 1..=4 {
        let scan: Vec<(Rational, f64)> = [4, 8, 16]
            .iter()
            .map(|&q| (rat(1, q), spitzer_check(&a, order, &rat(1, q)).unwrap()))
            .collect();
        for p in observed_orders(&scan) {
            assert!(
                (p - (order + 1) as f64).abs() <= 0.3,
                "N = {order}: order {p}"
            );
        }
    }
}

#[test]
fn spitzer_scalar_and_nilpotent() {
    let a = MatPolyPath::scalar(Poly::new(vec![int(1), int(1)]));
    let s = rat(1, 2);
    let r = magnus_forest::rational::to_f64(&a.integral().eval(&s).entries()[0]);
    let tail = (r.exp() - (1.0 + r + r * r / 2.0)).abs();
    assert!((spitzer_check(&a, 2, &s).unwrap() - tail).abs() < 1e-15);

    let n = ExactMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(0), int(0)]]).unwrap();
    let nil = MatPolyPath::constant(&n);
    assert_eq!(spitzer_check(&nil, 1, &s).unwrap(), 0.0);
}

#[test]
fn magnus_exponential_matches_float_expm() {
    let a = default_path();
    let omega = mps_omega(&a, 3, &rat(1, 4)).unwrap();
    let direct = matrix_exp(&omega.to_f64());
    let rows: Vec<Vec<f64>> = direct.data().chunks(2).map(<[f64]>::to_vec).collect();
    assert_eq!(
        magnus_exponential(&omega),
        FloatMatrix::from_rows(&rows).unwrap()
    );
}

use magnus_forest::dendriform::*;
use magnus_forest::forest::RootedTree;
use magnus_forest::prelie::*;
use magnus_forest::rational::{int, rat, Rational};
use num_traits::Zero;

fn ladder(n: usize, trunc: usize) -> TreeSeries {
    TreeSeries::from_tree(RootedTree::ladder(n), trunc)
}

/// A deterministic mixed element: every tree of degree ≤ 2 with assorted weights.
fn mixed(trunc: usize) -> TreeSeries {
    let weights = [rat(1, 1), rat(-2, 3), rat(3, 2), rat(1, 5)];
    TreeSeries::from_terms(
        trunc,
        (1..=2)
            .flat_map(RootedTree::enumerate)
            .zip(weights.iter().cycle())
            .map(|(t, w)| (t, w.clone())),
    )
}

#[test]
fn w_first_terms() {
    let a = ladder(1, 4);
    let w = flow_w_series(&a).unwrap();
    let aa = a.prelie(&a).unwrap();
    assert_eq!(w.degree_part(1), a);
    assert_eq!(w.degree_part(2), aa.scale(&rat(1, 2)));
    assert_eq!(w.degree_part(3), a.prelie(&aa).unwrap().scale(&rat(1, 6)));
}

#[test]
fn omega_inverts_w() {
    let a = ladder(1, 6).add(&ladder(2, 6)).unwrap();
    assert_eq!(flow_omega_series(&flow_w_series(&a).unwrap()).unwrap(), a);
    let b = mixed(6);
    assert_eq!(flow_w_series(&flow_omega_series(&b).unwrap()).unwrap(), b);
}

#[test]
fn omega_is_prelie_magnus() {
    let b = mixed(5);
    assert_eq!(
        flow_omega_series(&b).unwrap(),
        prelie_magnus_series(&b).unwrap()
    );
}

#[test]
fn sharp_group_laws() {
    const N: usize = 5;
    let zero = TreeSeries::zero(N);
    let a = ladder(1, N);
    let b = a.prec(&a).unwrap();
    let c = mixed(N);
    assert_eq!(sharp_series(&zero, &b).unwrap(), b);
    assert_eq!(sharp_series(&a, &zero).unwrap(), a);
    let inv = sharp_inverse_series(&a).unwrap();
    assert!(sharp_series(&a, &inv).unwrap().is_zero());
    assert!(sharp_series(&inv, &a).unwrap().is_zero());
    let left = sharp_series(&sharp_series(&a, &b).unwrap(), &c).unwrap();
    let right = sharp_series(&a, &sharp_series(&b, &c).unwrap()).unwrap();
    assert_eq!(left, right);
}

#[test]
fn fixpoint_product_is_fixpoint_of_sharp() {
    const N: usize = 5;
    let a = ladder(1, N);
    let b = a.prec(&a).unwrap();
    let lhs = solve_left_fixpoint(&a)
        .unwrap()
        .star(&solve_left_fixpoint(&b).unwrap())
        .unwrap();
    let rhs = solve_left_fixpoint(&sharp_series(&a, &b).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn flow_preconditions() {
    let one = TreeSeries::one(3);
    assert!(flow_w_series(&one).is_err());
    assert!(flow_omega_series(&one).is_err());
    assert!(prelie_magnus_series(&one).is_err());
    assert!(sharp_series(&ladder(1, 3), &ladder(1, 4)).is_err());
}

/// Truncated power series `Σ cₖ xᵏ` (no constant term) with `▷` the ordinary
/// product: an associative, hence pre-Lie, filtered algebra.
#[derive(Clone, Debug, PartialEq)]
struct PowerSeries(Vec<Rational>);

impl PowerSeries {
    fn new(trunc: usize, coeffs: &[Rational]) -> Self {
        let mut v = vec![Rational::zero(); trunc + 1];
        for (i, c) in coeffs.iter().enumerate().take(trunc + 1) {
            v[i] = c.clone();
        }
        PowerSeries(v)
    }
}

impl FilteredPreLie for PowerSeries {
    fn trunc(&self) -> usize {
        self.0.len() - 1
    }
    fn zero_like(&self) -> Self {
        PowerSeries(vec![Rational::zero(); self.0.len()])
    }
    fn add(&self, other: &Self) -> Self {
        PowerSeries(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
    fn scale(&self, c: &Rational) -> Self {
        PowerSeries(self.0.iter().map(|a| a * c).collect())
    }
    fn prelie(&self, other: &Self) -> Self {
        let n = self.0.len();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n - i {
                out[i + j] += &self.0[i] * &other.0[j];
            }
        }
        PowerSeries(out)
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

#[test]
fn associative_stand_in_simplifies_sharp() {
    const N: usize = 6;
    let a = PowerSeries::new(N, &[int(0), int(1), rat(-1, 2), int(3)]);
    let b = PowerSeries::new(N, &[int(0), int(2), int(0), rat(1, 7)]);
    let expected = a.prelie(&b).add(&a).add(&b);
    assert_eq!(sharp(&a, &b), expected);
    // a^{#−1} = 1/(1+a) − 1
    let inv = sharp_inverse(&a);
    assert!(sharp(&a, &inv).is_zero());
    let mut geometric = a.zero_like();
    let mut power = a.scale(&int(-1));
    for _ in 0..N {
        geometric = geometric.add(&power);
        power = power.prelie(&a.scale(&int(-1)));
    }
    assert_eq!(inv, geometric);
}

//! The free unital dendriform algebra on one generator, realized on planar
//! rooted trees with exact rational coefficients.

mod logexp;
mod magnus;
mod products;
mod series;

pub use logexp::{solve_left_fixpoint, solve_left_fixpoint_with};
pub use magnus::{
    bernoulli, bernoulli_table, closed_fixpoint_log_series, closed_magnus_series,
    descent_magnus_coefficient, fixpoint_log_coefficient, ladder_log_oracle, ladder_monomial,
    ladder_sum, magnus_coefficient,
};
pub use products::{ladder_star, prec_basis, star_basis, succ_basis, SplitConvention};
pub use series::TreeSeries;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{rotate, BinaryTree, RootedTree};
    use crate::rational::{int, rat, Rational};

    fn t(s: &str) -> RootedTree {
        RootedTree::parse(s).unwrap()
    }

    fn series(n: usize, terms: &[(&str, Rational)]) -> TreeSeries {
        TreeSeries::from_terms(n, terms.iter().map(|(s, c)| (t(s), c.clone())))
    }

    fn ladder(n: usize, trunc: usize) -> TreeSeries {
        TreeSeries::from_tree(RootedTree::ladder(n), trunc)
    }

    #[test]
    fn star_golden_values() {
        let l1 = ladder(1, 3);
        let l2 = ladder(2, 3);
        assert_eq!(
            l1.star(&l1).unwrap(),
            series(3, &[("[[][]]", int(1)), ("[[[]]]", int(1))])
        );
        assert_eq!(
            l1.star(&l2).unwrap(),
            series(
                3,
                &[
                    ("[[][[]]]", int(1)),
                    ("[[[][]]]", int(1)),
                    ("[[[[]]]]", int(1))
                ]
            )
        );
        assert_eq!(
            l2.star(&l1).unwrap(),
            series(3, &[("[[[]][]]", int(1)), ("[[[[]]]]", int(1))])
        );
    }

    #[test]
    fn star_unit_and_truncation() {
        let x = series(3, &[("[[]]", int(2)), ("[[][]]", rat(1, 3))]);
        assert_eq!(TreeSeries::one(3).star(&x).unwrap(), x);
        assert_eq!(x.star(&TreeSeries::one(3)).unwrap(), x);
        // degree 2 + 2 exceeds the truncation
        assert!(x.degree_part(2).star(&x.degree_part(2)).unwrap().is_zero());
        assert!(x.star(&TreeSeries::one(4)).is_err());
    }

    #[test]
    fn ladder_star_matches_star() {
        for n in 1..=6 {
            for m in 1..=6 {
                let closed = ladder_star(n, m).unwrap();
                assert_eq!(closed.len(), m + 1);
                let direct = ladder(n, n + m).star(&ladder(m, n + m)).unwrap();
                assert_eq!(closed, direct, "n={n} m={m}");
            }
        }
        assert!(ladder_star(0, 2).is_err());
    }

    #[test]
    fn half_products() {
        let a = ladder(1, 4);
        assert_eq!(a.prec(&a).unwrap(), series(4, &[("[[][]]", int(1))]));
        assert_eq!(a.succ(&a).unwrap(), series(4, &[("[[[]]]", int(1))]));
        assert_eq!(
            a.prelie(&a).unwrap(),
            series(4, &[("[[[]]]", int(1)), ("[[][]]", int(-1))])
        );
        let one = TreeSeries::one(4);
        assert_eq!(one.succ(&a).unwrap(), a);
        assert_eq!(a.prec(&one).unwrap(), a);
        assert!(one.prec(&a).unwrap().is_zero());
        assert!(a.succ(&one).unwrap().is_zero());
        assert!(one.prec(&one).is_err());
        assert!(one.succ(&one).is_err());
        assert!(one.prelie(&a).is_err());
    }

    #[test]
    fn log_and_exp() {
        assert!(TreeSeries::one(4).log_star().unwrap().is_zero());
        let u = TreeSeries::one(3).add(&ladder(1, 3)).unwrap();
        let log = u.log_star().unwrap();
        assert_eq!(
            log.degree_part(2),
            series(3, &[("[[][]]", rat(-1, 2)), ("[[[]]]", rat(-1, 2))])
        );
        let l = ladder_sum(7);
        assert_eq!(l.log_star().unwrap().exp_star().unwrap(), l);
        assert!(ladder(1, 3).log_star().is_err());
        assert!(u.exp_star().is_err());
    }

    #[test]
    fn fixpoint_is_corolla_sum() {
        let a = ladder(1, 3);
        let x = solve_left_fixpoint(&a).unwrap();
        let expected = TreeSeries::from_terms(3, (0..=3).map(|n| (RootedTree::corolla(n), int(1))));
        assert_eq!(x, expected);
        assert_eq!(
            solve_left_fixpoint(&TreeSeries::zero(3)).unwrap(),
            TreeSeries::one(3)
        );
    }

    #[test]
    fn coefficient_table() {
        assert_eq!(magnus_coefficient(&RootedTree::ladder(1)).unwrap(), int(1));
        assert_eq!(magnus_coefficient(&t("[[][]]")).unwrap(), rat(-1, 2));
        assert_eq!(
            magnus_coefficient(&RootedTree::ladder(2)).unwrap(),
            rat(1, 2)
        );
        assert_eq!(
            magnus_coefficient(&RootedTree::ladder(3)).unwrap(),
            rat(1, 3)
        );
        assert_eq!(
            magnus_coefficient(&RootedTree::corolla(3)).unwrap(),
            rat(1, 3)
        );
        for two_leaf in ["[[][[]]]", "[[[][]]]", "[[[]][]]"] {
            assert_eq!(magnus_coefficient(&t(two_leaf)).unwrap(), rat(-1, 6));
        }
        assert!(magnus_coefficient(&RootedTree::vertex()).is_err());
    }

    #[test]
    fn closed_series_first_terms() {
        assert_eq!(closed_magnus_series(1), ladder(1, 1));
        assert_eq!(
            closed_magnus_series(2),
            series(
                2,
                &[
                    ("[[]]", int(1)),
                    ("[[[]]]", rat(1, 2)),
                    ("[[][]]", rat(-1, 2))
                ]
            )
        );
    }

    #[test]
    fn descent_coefficients() {
        let y = BinaryTree::y();
        assert_eq!(descent_magnus_coefficient(&y).unwrap(), int(1));
        let right = BinaryTree::parse("(. (. .))").unwrap();
        let left = BinaryTree::parse("((. .) .)").unwrap();
        assert_eq!(descent_magnus_coefficient(&right).unwrap(), rat(-1, 2));
        assert_eq!(descent_magnus_coefficient(&left).unwrap(), rat(1, 2));
        for n in 1..=6 {
            for b in BinaryTree::enumerate(n) {
                assert_eq!(
                    descent_magnus_coefficient(&b).unwrap(),
                    magnus_coefficient(&rotate(&b)).unwrap()
                );
            }
        }
        assert!(descent_magnus_coefficient(&BinaryTree::leaf()).is_err());
    }

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        for k in [3, 5, 7, 9] {
            assert_eq!(bernoulli(k), int(0));
        }
    }
}

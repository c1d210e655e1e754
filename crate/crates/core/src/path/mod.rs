//! Matrix-valued polynomial paths as a concrete Rota–Baxter algebra.
//!
//! `R` is the antiderivative vanishing at `t = 0`. With weight `θ` the
//! induced products are
//! `f≺g = fR(g) + θfg`, `f≻g = R(f)g` and `f▷g = [R(f), g] − θgf`.
//! Only `θ = 0` is exercised; the θ-terms are kept so the formulas read as
//! written.

mod matrix;
mod poly;
mod simplex;

use std::collections::HashMap;

use num_traits::Zero;

pub use matrix::{ExactMatrix, MatPolyPath};
pub use poly::Poly;
pub use simplex::{eval_perm_integral, perm_integral, SimplexPoly};

use crate::dendriform::TreeSeries;
use crate::error::{Error, Result};
use crate::forest::RootedTree;
use crate::rational::Rational;

/// The operator `R` together with its weight.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightedRBAdapter {
    theta: Rational,
}

impl WeightedRBAdapter {
    pub fn new(theta: Rational) -> Self {
        WeightedRBAdapter { theta }
    }

    pub fn integral() -> Self {
        Self::default()
    }

    pub fn theta(&self) -> &Rational {
        &self.theta
    }

    pub fn r(&self, f: &MatPolyPath) -> MatPolyPath {
        f.integral()
    }

    /// `R̃ = −θ·id − R`.
    pub fn r_tilde(&self, f: &MatPolyPath) -> MatPolyPath {
        f.scale(&-self.theta.clone())
            .sub(&f.integral())
            .expect("same dim")
    }

    fn with_theta(
        &self,
        base: MatPolyPath,
        f: &MatPolyPath,
        g: &MatPolyPath,
    ) -> Result<MatPolyPath> {
        if self.theta.is_zero() {
            return Ok(base);
        }
        base.add(&f.mul(g)?.scale(&self.theta))
    }

    pub fn prec(&self, f: &MatPolyPath, g: &MatPolyPath) -> Result<MatPolyPath> {
        self.with_theta(f.mul(&g.integral())?, f, g)
    }

    pub fn succ(&self, f: &MatPolyPath, g: &MatPolyPath) -> Result<MatPolyPath> {
        f.integral().mul(g)
    }

    pub fn star(&self, f: &MatPolyPath, g: &MatPolyPath) -> Result<MatPolyPath> {
        let base = f.integral().mul(g)?.add(&f.mul(&g.integral())?)?;
        self.with_theta(base, f, g)
    }

    pub fn prelie(&self, f: &MatPolyPath, g: &MatPolyPath) -> Result<MatPolyPath> {
        let base = f.integral().commutator(g)?;
        if self.theta.is_zero() {
            return Ok(base);
        }
        base.sub(&g.mul(f)?.scale(&self.theta))
    }

    /// The dendriform morphism from rooted trees to paths sending the
    /// single edge to `a`:
    /// `E(t₁↘t₂) = (E(t₁)≻a)≺E(t₂)` with `E(•)` the formal unit.
    ///
    /// The unit is not a path, so `•` itself is rejected.
    pub fn eval_tree(&self, tree: &RootedTree, a: &MatPolyPath) -> Result<MatPolyPath> {
        let mut memo = HashMap::new();
        self.eval_tree_memo(tree, a, &mut memo)
    }

    fn eval_tree_memo(
        &self,
        tree: &RootedTree,
        a: &MatPolyPath,
        memo: &mut HashMap<RootedTree, MatPolyPath>,
    ) -> Result<MatPolyPath> {
        if let Some(hit) = memo.get(tree) {
            return Ok(hit.clone());
        }
        let (t1, t2) = tree.split().ok_or(Error::DegreeZero("eval_tree_path"))?;
        // 1 ≻ a = a and x ≺ 1 = x.
        let left = if t1.is_vertex() {
            a.clone()
        } else {
            self.succ(&self.eval_tree_memo(&t1, a, memo)?, a)?
        };
        let out = if t2.is_vertex() {
            left
        } else {
            self.prec(&left, &self.eval_tree_memo(&t2, a, memo)?)?
        };
        memo.insert(tree.clone(), out.clone());
        Ok(out)
    }

    /// Linear extension of [`Self::eval_tree`]; the series must have no
    /// constant term.
    pub fn eval_series(&self, series: &TreeSeries, a: &MatPolyPath) -> Result<MatPolyPath> {
        if !series.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut memo = HashMap::new();
        let mut out = MatPolyPath::zero(a.dim());
        for (tree, c) in series.terms() {
            out = out.add(&self.eval_tree_memo(tree, a, &mut memo)?.scale(c))?;
        }
        Ok(out)
    }
}

/// [`WeightedRBAdapter::eval_tree`] at weight zero.
pub fn eval_tree_path(tree: &RootedTree, a: &MatPolyPath) -> Result<MatPolyPath> {
    WeightedRBAdapter::integral().eval_tree(tree, a)
}

/// The default test path `A(t) = [[0, 1], [−1 − t, 0]]`.
pub fn default_path() -> MatPolyPath {
    use crate::rational::int;
    MatPolyPath::from_rows(vec![
        vec![Poly::zero(), Poly::constant(int(1))],
        vec![Poly::new(vec![int(-1), int(-1)]), Poly::zero()],
    ])
    .expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| int(x)).collect())
    }

    fn sample_f() -> MatPolyPath {
        MatPolyPath::from_rows(vec![
            vec![p(&[1, 2]), p(&[0, 0, 3])],
            vec![p(&[-1]), p(&[2, -1, 1])],
        ])
        .unwrap()
    }

    fn sample_g() -> MatPolyPath {
        MatPolyPath::from_rows(vec![
            vec![p(&[0, 1, 1]), p(&[4])],
            vec![p(&[1, 0, 0, -2]), p(&[])],
        ])
        .unwrap()
    }

    #[test]
    fn integral_basics() {
        let one = MatPolyPath::scalar(p(&[1]));
        assert_eq!(one.integral(), MatPolyPath::scalar(p(&[0, 1])));
        let t3 = MatPolyPath::scalar(Poly::monomial(3));
        assert_eq!(
            t3.integral(),
            MatPolyPath::scalar(Poly::monomial(4).scale(&rat(1, 4)))
        );
    }

    #[test]
    fn rota_baxter_identity() {
        let (f, g) = (sample_f(), sample_g());
        let lhs = f.integral().mul(&g.integral()).unwrap();
        let rhs = f
            .integral()
            .mul(&g)
            .unwrap()
            .add(&f.mul(&g.integral()).unwrap())
            .unwrap()
            .integral();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_products() {
        let rb = WeightedRBAdapter::integral();
        let one = MatPolyPath::scalar(p(&[1]));
        let t = MatPolyPath::scalar(p(&[0, 1]));
        assert_eq!(rb.prec(&one, &one).unwrap(), t);
        assert_eq!(rb.succ(&one, &one).unwrap(), t);
        let (f, g) = (sample_f(), sample_g());
        let expect = f
            .integral()
            .mul(&g)
            .unwrap()
            .sub(&g.mul(&f.integral()).unwrap())
            .unwrap();
        assert_eq!(rb.prelie(&f, &g).unwrap(), expect);
    }

    #[test]
    fn weighted_products_keep_theta_terms() {
        let rb = WeightedRBAdapter::new(rat(1, 2));
        let (f, g) = (sample_f(), sample_g());
        let sum = rb
            .prec(&f, &g)
            .unwrap()
            .add(&rb.succ(&f, &g).unwrap())
            .unwrap();
        assert_eq!(sum, rb.star(&f, &g).unwrap());
        let pre = rb
            .succ(&f, &g)
            .unwrap()
            .sub(&rb.prec(&g, &f).unwrap())
            .unwrap();
        assert_eq!(pre, rb.prelie(&f, &g).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let rb = WeightedRBAdapter::integral();
        let err = rb
            .star(&sample_f(), &MatPolyPath::scalar(p(&[1])))
            .unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch { left: 2, right: 1 }
        ));
    }

    #[test]
    fn tree_evaluation_examples() {
        let a = sample_f();
        let ra = a.integral();
        assert_eq!(eval_tree_path(&RootedTree::ladder(1), &a).unwrap(), a);
        assert_eq!(
            eval_tree_path(&RootedTree::corolla(2), &a).unwrap(),
            a.mul(&ra).unwrap()
        );
        assert_eq!(
            eval_tree_path(&RootedTree::ladder(2), &a).unwrap(),
            ra.mul(&a).unwrap()
        );
        assert!(eval_tree_path(&RootedTree::vertex(), &a).is_err());
    }

    #[test]
    fn comb_evaluations() {
        let rb = WeightedRBAdapter::integral();
        let a = sample_g();
        let mut corolla = a.clone();
        let mut ladder = a.clone();
        for n in 2..=4 {
            corolla = rb.prec(&a, &corolla).unwrap();
            ladder = rb.succ(&ladder, &a).unwrap();
            assert_eq!(
                eval_tree_path(&RootedTree::corolla(n), &a).unwrap(),
                corolla
            );
            assert_eq!(eval_tree_path(&RootedTree::ladder(n), &a).unwrap(), ladder);
        }
    }

    #[test]
    fn json_round_trip() {
        let a = default_path();
        let js = a.to_json();
        assert_eq!(js["entries"][1][0], serde_json::json!(["-1", "-1"]));
        assert_eq!(MatPolyPath::from_json(&js).unwrap(), a);
        let bad = serde_json::json!({"dim": 2, "entries": [[["1"]]]});
        assert!(MatPolyPath::from_json(&bad).is_err());
    }
}

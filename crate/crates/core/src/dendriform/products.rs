//! The dendriform structure transported to planar rooted trees.
//!
//! For `s = s₁ ↘ s₂` and `t = t₁ ↘ t₂` the associative product is
//! `s ⋆ t = s₁ ↘ (s₂ ⋆ t) + (s ⋆ t₁) ↘ t₂` with `•` as unit. Which of the two
//! terms is `≺` is selected by [`SplitConvention`].

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forest::RootedTree;
use crate::rational::Rational;

use super::TreeSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SplitConvention {
    /// `s ≺ t = s₁ ↘ (s₂ ⋆ t)`, `s ≻ t = (s ⋆ t₁) ↘ t₂`.
    #[default]
    FirstTermPrec,
    /// The labels swapped. Does not give a dendriform algebra.
    SecondTermPrec,
}

type Basis = Rc<[RootedTree]>;

thread_local! {
    static STAR_CACHE: RefCell<HashMap<(RootedTree, RootedTree), Basis>> =
        RefCell::new(HashMap::new());
}

/// `s ⋆ t` on basis trees, as a multiset of trees.
pub fn star_basis(s: &RootedTree, t: &RootedTree) -> Basis {
    if s.is_vertex() {
        return Rc::from(vec![t.clone()]);
    }
    if t.is_vertex() {
        return Rc::from(vec![s.clone()]);
    }
    let key = (s.clone(), t.clone());
    if let Some(hit) = STAR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let mut out = first_term(s, t);
    out.extend(second_term(s, t));
    let out: Basis = Rc::from(out);
    STAR_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// `s₁ ↘ (s₂ ⋆ t)` for non-unit `s`, `t`.
fn first_term(s: &RootedTree, t: &RootedTree) -> Vec<RootedTree> {
    let (s1, s2) = s.split().expect("non-unit tree");
    star_basis(&s2, t)
        .iter()
        .map(|u| s1.left_butcher(u))
        .collect()
}

/// `(s ⋆ t₁) ↘ t₂` for non-unit `s`, `t`.
fn second_term(s: &RootedTree, t: &RootedTree) -> Vec<RootedTree> {
    let (t1, t2) = t.split().expect("non-unit tree");
    star_basis(s, &t1)
        .iter()
        .map(|v| v.left_butcher(&t2))
        .collect()
}

/// `s ≺ t` on basis trees, using the unit rules `a ≺ • = a`, `• ≺ a = 0`.
pub fn prec_basis(
    s: &RootedTree,
    t: &RootedTree,
    conv: SplitConvention,
) -> Result<Vec<RootedTree>> {
    match (s.is_vertex(), t.is_vertex()) {
        (true, true) => Err(Error::UnitHalfProduct),
        (false, true) => Ok(vec![s.clone()]),
        (true, false) => Ok(Vec::new()),
        (false, false) => Ok(match conv {
            SplitConvention::FirstTermPrec => first_term(s, t),
            SplitConvention::SecondTermPrec => second_term(s, t),
        }),
    }
}

/// `s ≻ t` on basis trees, using the unit rules `• ≻ a = a`, `a ≻ • = 0`.
pub fn succ_basis(
    s: &RootedTree,
    t: &RootedTree,
    conv: SplitConvention,
) -> Result<Vec<RootedTree>> {
    match (s.is_vertex(), t.is_vertex()) {
        (true, true) => Err(Error::UnitHalfProduct),
        (true, false) => Ok(vec![t.clone()]),
        (false, true) => Ok(Vec::new()),
        (false, false) => Ok(match conv {
            SplitConvention::FirstTermPrec => second_term(s, t),
            SplitConvention::SecondTermPrec => first_term(s, t),
        }),
    }
}

/// Bilinear extension of a basis product, skipping pairs above the truncation.
fn bilinear<F>(x: &TreeSeries, y: &TreeSeries, mut basis: F) -> Result<TreeSeries>
where
    F: FnMut(&RootedTree, &RootedTree) -> Result<Vec<RootedTree>>,
{
    x.check_trunc(y)?;
    let n = x.trunc();
    let mut out = TreeSeries::zero(n);
    for (s, cs) in x.terms() {
        for (t, ct) in y.terms() {
            if s.degree() + t.degree() > n {
                continue;
            }
            let c: Rational = cs * ct;
            for u in basis(s, t)? {
                out.add_term(u, c.clone());
            }
        }
    }
    Ok(out)
}

impl TreeSeries {
    /// The associative product `x ⋆ y`, truncated.
    pub fn star(&self, other: &TreeSeries) -> Result<TreeSeries> {
        bilinear(self, other, |s, t| Ok(star_basis(s, t).to_vec()))
    }

    /// `x ≺ y` under the normative convention.
    pub fn prec(&self, other: &TreeSeries) -> Result<TreeSeries> {
        self.prec_with(other, SplitConvention::FirstTermPrec)
    }

    /// `x ≻ y` under the normative convention.
    pub fn succ(&self, other: &TreeSeries) -> Result<TreeSeries> {
        self.succ_with(other, SplitConvention::FirstTermPrec)
    }

    pub fn prec_with(&self, other: &TreeSeries, conv: SplitConvention) -> Result<TreeSeries> {
        half_guard(self, other)?;
        bilinear(self, other, |s, t| prec_basis(s, t, conv))
    }

    pub fn succ_with(&self, other: &TreeSeries, conv: SplitConvention) -> Result<TreeSeries> {
        half_guard(self, other)?;
        bilinear(self, other, |s, t| succ_basis(s, t, conv))
    }

    /// Left pre-Lie product `x ▷ y = x ≻ y − y ≺ x` on the augmentation ideal.
    pub fn prelie(&self, other: &TreeSeries) -> Result<TreeSeries> {
        self.prelie_with(other, SplitConvention::FirstTermPrec)
    }

    pub fn prelie_with(&self, other: &TreeSeries, conv: SplitConvention) -> Result<TreeSeries> {
        if !self.constant_term().is_zero() || !other.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        self.succ_with(other, conv)?
            .sub(&other.prec_with(self, conv)?)
    }

    /// `x ⋆ x ⋆ ⋯ ⋆ x` (`k` factors); `x^{⋆0} = 1`.
    pub fn star_pow(&self, k: usize) -> Result<TreeSeries> {
        let mut acc = TreeSeries::one(self.trunc());
        for _ in 0..k {
            acc = acc.star(self)?;
        }
        Ok(acc)
    }
}

fn half_guard(x: &TreeSeries, y: &TreeSeries) -> Result<()> {
    x.check_trunc(y)?;
    if !x.constant_term().is_zero() && !y.constant_term().is_zero() {
        return Err(Error::UnitHalfProduct);
    }
    Ok(())
}

/// Closed form of `ℓ⁽ⁿ⁾ ⋆ ℓ⁽ᵐ⁾`: the sum over `r = 0..=m` of
/// `(ℓ⁽ⁿ⁻¹⁾ ↘ ℓ⁽ᵐ⁻ʳ⁾)` with `r` further factors `↘ •` applied on the right.
pub fn ladder_star(n: usize, m: usize) -> Result<TreeSeries> {
    if n == 0 || m == 0 {
        return Err(Error::OutOfRange(format!(
            "ladder_star({n}, {m}) needs n, m ≥ 1"
        )));
    }
    let dot = RootedTree::vertex();
    let base = RootedTree::ladder(n - 1);
    let terms = (0..=m).map(|r| {
        let inner = base.left_butcher(&RootedTree::ladder(m - r));
        let tree = (0..r).fold(inner, |acc, _| acc.left_butcher(&dot));
        (tree, Rational::from_integer(1.into()))
    });
    Ok(TreeSeries::from_terms(n + m, terms))
}

//! Closed coefficient formulas for the logarithm of the linear dendriform
//! equation's solution, and the brute-force ladder oracle they are checked
//! against.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::{BinaryTree, Composition, RootedTree};
use crate::rational::{binomial, sign, Rational};

use super::TreeSeries;

/// `(−1)^{L(τ)−1} / (n·C(n−1, L(τ)−1))` for a tree of degree `n ≥ 1`.
pub fn magnus_coefficient(tree: &RootedTree) -> Result<Rational> {
    let n = tree.degree();
    if n == 0 {
        return Err(Error::DegreeZero("Magnus coefficient"));
    }
    let leaves = tree.leaf_count();
    Ok(sign(leaves - 1) / leaf_weight(n, leaves - 1))
}

/// Coefficient of `τ` in the logarithm of the `≺`-fixpoint (the corolla sum):
/// `(−1)^{n−L(τ)} / (n·C(n−1, L(τ)−1))`.
pub fn fixpoint_log_coefficient(tree: &RootedTree) -> Result<Rational> {
    let n = tree.degree();
    if n == 0 {
        return Err(Error::DegreeZero("Magnus coefficient"));
    }
    let leaves = tree.leaf_count();
    Ok(sign(n - leaves) / leaf_weight(n, leaves - 1))
}

/// `(−1)^{d(t)} / (n·C(n−1, d(t)))` for a binary tree of degree `n ≥ 1`.
pub fn descent_magnus_coefficient(tree: &BinaryTree) -> Result<Rational> {
    let n = tree.degree();
    if n == 0 {
        return Err(Error::DegreeZero("Magnus coefficient"));
    }
    let d = tree.descent_count();
    Ok(sign(d) / leaf_weight(n, d))
}

pub(crate) fn leaf_weight(n: usize, k: usize) -> Rational {
    Rational::from_integer(BigInt::from(n) * binomial(n - 1, k))
}

/// `Σ_{1≤n≤N} Σ_{|τ|=n} magnus_coefficient(τ)·τ`.
pub fn closed_magnus_series(trunc: usize) -> TreeSeries {
    coefficient_series(trunc, |t| magnus_coefficient(t).expect("degree ≥ 1"))
}

/// The same sum with [`fixpoint_log_coefficient`].
pub fn closed_fixpoint_log_series(trunc: usize) -> TreeSeries {
    coefficient_series(trunc, |t| fixpoint_log_coefficient(t).expect("degree ≥ 1"))
}

fn coefficient_series<F: Fn(&RootedTree) -> Rational>(trunc: usize, coeff: F) -> TreeSeries {
    TreeSeries::from_terms(
        trunc,
        (1..=trunc).flat_map(|n| {
            RootedTree::enumerate(n)
                .into_iter()
                .map(|t| {
                    let c = coeff(&t);
                    (t, c)
                })
                .collect::<Vec<_>>()
        }),
    )
}

/// `1 + Σ_{1≤n≤N} ℓ⁽ⁿ⁾`.
pub fn ladder_sum(trunc: usize) -> TreeSeries {
    TreeSeries::from_terms(
        trunc,
        (0..=trunc).map(|n| (RootedTree::ladder(n), Rational::one())),
    )
}

/// `log⋆(1 + Σ ℓ⁽ⁿ⁾)` expanded over compositions: the degree-`n` part is
/// `Σ_k −(−1)ᵏ/k Σ_{i₁+⋯+i_k=n} ℓ^{(i₁)} ⋆ ⋯ ⋆ ℓ^{(i_k)}`.
pub fn ladder_log_oracle(trunc: usize) -> Result<TreeSeries> {
    let mut out = TreeSeries::zero(trunc);
    for n in 1..=trunc {
        for comp in Composition::all(n) {
            let k = comp.len();
            let monomial = ladder_monomial(&comp, trunc)?;
            let c = Rational::new(
                BigInt::from(if k % 2 == 1 { 1 } else { -1 }),
                BigInt::from(k),
            );
            out = out.add(&monomial.scale(&c))?;
        }
    }
    Ok(out)
}

/// `ℓ^{(i₁)} ⋆ ⋯ ⋆ ℓ^{(i_k)}`.
pub fn ladder_monomial(comp: &Composition, trunc: usize) -> Result<TreeSeries> {
    let mut acc = TreeSeries::one(trunc);
    for &i in comp.parts() {
        acc = acc.star(&TreeSeries::from_tree(RootedTree::ladder(i), trunc))?;
    }
    Ok(acc)
}

/// Bernoulli numbers with `B₁ = −1/2`, from `Σ_{j≤m} C(m+1, j) B_j = 0`.
pub fn bernoulli(m: usize) -> Rational {
    bernoulli_table(m).pop().expect("non-empty")
}

/// `[B₀, …, B_m]`.
pub fn bernoulli_table(m: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for k in 1..=m {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Rational::from_integer(binomial(k + 1, j)) * bj;
        }
        b.push(-acc / Rational::from_integer(BigInt::from(k + 1)));
    }
    b
}

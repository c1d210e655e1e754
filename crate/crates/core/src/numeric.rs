//! Magnus truncations of `Ż = a(t)Z` for polynomial paths, computed three
//! ways, plus the Dyson–Chen reference solution.
//!
//! Every `*_parts` function returns the homogeneous components in `a` as
//! polynomials in `s`: entry `n − 1` is the degree-`n` part.

use num_traits::Zero;
use rayon::prelude::*;

use crate::dendriform::fixpoint_log_coefficient;
use crate::error::{Error, Result};
use crate::forest::RootedTree;
use crate::linalg::{matrix_exp, FloatMatrix};
use crate::path::{perm_integral, ExactMatrix, MatPolyPath, WeightedRBAdapter};
use crate::perm::{mps_coefficient, Permutation};
use crate::prelie::{prelie_magnus, FilteredPreLie};
use crate::rational::{binomial, rat, sign, Rational};

fn check_order(n: usize, what: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::DegreeZero(what));
    }
    Ok(())
}

fn sum_paths(dim: usize, items: impl IntoIterator<Item = MatPolyPath>) -> Result<MatPolyPath> {
    items
        .into_iter()
        .try_fold(MatPolyPath::zero(dim), |acc, p| acc.add(&p))
}

fn eval_sum(parts: &[MatPolyPath], s: &Rational) -> Result<ExactMatrix> {
    let dim = parts.first().map_or(1, MatPolyPath::dim);
    Ok(sum_paths(dim, parts.iter().cloned())?.eval(s))
}

/// `Σ_{σ∈Sₙ} c(σ) ∫_{Δₙ} a(u_{σ1})⋯a(u_{σn})` for one degree. The integrals
/// are independent; they are summed in the fixed order of [`Permutation::all`]
/// so the result does not depend on scheduling.
fn weighted_perm_sum(
    a: &MatPolyPath,
    n: usize,
    parallel: bool,
    weight: impl Fn(&Permutation) -> Rational + Sync,
) -> Result<MatPolyPath> {
    let perms = Permutation::all(n);
    let one = |sigma: &Permutation| -> Result<MatPolyPath> {
        Ok(perm_integral(sigma, a)?.scale(&weight(sigma)))
    };
    let terms: Vec<MatPolyPath> = if parallel {
        perms.par_iter().map(one).collect::<Result<_>>()?
    } else {
        perms.iter().map(one).collect::<Result<_>>()?
    };
    sum_paths(a.dim(), terms)
}

/// Homogeneous parts of the permutation-route Magnus element.
pub fn mps_omega_parts(a: &MatPolyPath, order: usize, parallel: bool) -> Result<Vec<MatPolyPath>> {
    check_order(order, "mps_omega")?;
    (1..=order)
        .map(|n| weighted_perm_sum(a, n, parallel, mps_coefficient))
        .collect()
}

/// `Ω_N(s) = Σ_{n≤N} Σ_{σ∈Sₙ} (−1)^{d(σ)} / (n·C(n−1, d(σ))) ∫_{Δₙˢ} a(u_{σ1})⋯a(u_{σn})`.
pub fn mps_omega(a: &MatPolyPath, order: usize, s: &Rational) -> Result<ExactMatrix> {
    eval_sum(&mps_omega_parts(a, order, false)?, s)
}

/// Homogeneous parts of `R(Σ_τ c(τ) E(τ))` with the fixpoint-log
/// coefficients over rooted trees.
pub fn closed_tree_omega_parts(a: &MatPolyPath, order: usize) -> Result<Vec<MatPolyPath>> {
    check_order(order, "closed_tree_omega")?;
    let rb = WeightedRBAdapter::integral();
    (1..=order)
        .map(|n| {
            let mut acc = MatPolyPath::zero(a.dim());
            for tree in RootedTree::enumerate(n) {
                let c = fixpoint_log_coefficient(&tree)?;
                acc = acc.add(&rb.eval_tree(&tree, a)?.scale(&c))?;
            }
            Ok(acc.integral())
        })
        .collect()
}

pub fn closed_tree_omega(a: &MatPolyPath, order: usize, s: &Rational) -> Result<ExactMatrix> {
    eval_sum(&closed_tree_omega_parts(a, order)?, s)
}

/// A path series graded by degree in `a`, truncated at `trunc`. Component
/// `k − 1` holds degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPath {
    dim: usize,
    parts: Vec<MatPolyPath>,
}

impl GradedPath {
    pub fn zero(dim: usize, trunc: usize) -> Self {
        GradedPath {
            dim,
            parts: vec![MatPolyPath::zero(dim); trunc],
        }
    }

    /// `a` placed in degree one.
    pub fn generator(a: &MatPolyPath, trunc: usize) -> Self {
        let mut out = Self::zero(a.dim(), trunc);
        if trunc > 0 {
            out.parts[0] = a.clone();
        }
        out
    }

    pub fn parts(&self) -> &[MatPolyPath] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<MatPolyPath> {
        self.parts
    }
}

impl FilteredPreLie for GradedPath {
    fn trunc(&self) -> usize {
        self.parts.len()
    }

    fn zero_like(&self) -> Self {
        Self::zero(self.dim, self.parts.len())
    }

    fn add(&self, other: &Self) -> Self {
        GradedPath {
            dim: self.dim,
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(x, y)| x.add(y).expect("graded paths share a dimension"))
                .collect(),
        }
    }

    fn scale(&self, c: &Rational) -> Self {
        GradedPath {
            dim: self.dim,
            parts: self.parts.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// `(x▷y)ₙ = Σ_{i+j=n} [R(xᵢ), yⱼ]`.
    fn prelie(&self, other: &Self) -> Self {
        let rb = WeightedRBAdapter::integral();
        let mut out = self.zero_like();
        let n = self.parts.len();
        for (i, x) in self.parts.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.parts.iter().enumerate().take(n.saturating_sub(i + 1)) {
                if y.is_zero() {
                    continue;
                }
                let term = rb.prelie(x, y).expect("graded paths share a dimension");
                out.parts[i + j + 1] = out.parts[i + j + 1].add(&term).expect("same dimension");
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.parts.iter().all(MatPolyPath::is_zero)
    }
}

/// Homogeneous parts of `R(Ω′)` where `Ω′` solves the pre-Lie Magnus
/// recursion in the path algebra.
pub fn prelie_omega_parts(a: &MatPolyPath, order: usize) -> Result<Vec<MatPolyPath>> {
    check_order(order, "prelie_omega_numeric")?;
    let omega = prelie_magnus(&GradedPath::generator(a, order));
    Ok(omega
        .into_parts()
        .iter()
        .map(MatPolyPath::integral)
        .collect())
}

pub fn prelie_omega_numeric(a: &MatPolyPath, order: usize, s: &Rational) -> Result<ExactMatrix> {
    eval_sum(&prelie_omega_parts(a, order)?, s)
}

/// `1 + R(a) + R(aR(a)) + …` with `levels` nested integrals, as a
/// polynomial in `s`.
pub fn chen_reference_path(a: &MatPolyPath, levels: usize) -> Result<MatPolyPath> {
    check_order(levels, "chen_reference")?;
    let mut z = MatPolyPath::identity(a.dim());
    let mut out = z.clone();
    for _ in 0..levels {
        z = a.mul(&z)?.integral();
        out = out.add(&z)?;
    }
    Ok(out)
}

pub fn chen_reference(a: &MatPolyPath, levels: usize, s: &Rational) -> Result<ExactMatrix> {
    Ok(chen_reference_path(a, levels)?.eval(s))
}

/// Signed words of `[x₁,[x₂,…[xₙ₋₁,xₙ]…]]` over the letters of `word`.
fn right_nested_words(word: &[usize]) -> Vec<(Vec<usize>, bool)> {
    match word {
        [] => Vec::new(),
        [x] => vec![(vec![*x], true)],
        [x, rest @ ..] => {
            let inner = right_nested_words(rest);
            let mut out = Vec::with_capacity(2 * inner.len());
            for (w, positive) in &inner {
                let mut front = vec![*x];
                front.extend_from_slice(w);
                out.push((front, *positive));
            }
            for (w, positive) in inner {
                let mut back = w;
                back.push(*x);
                out.push((back, !positive));
            }
            out
        }
    }
}

/// Right-nested bracket form of the degree-`n` Magnus part, with weights
/// `(−1)^{d(σ)} / (n²·C(n−1, d(σ)))`.
pub fn dsw_bracket_part(a: &MatPolyPath, n: usize) -> Result<MatPolyPath> {
    if !(2..=5).contains(&n) {
        return Err(Error::OutOfRange(format!("dsw degree {n} not in 2..=5")));
    }
    // Fold the bracket expansion into one weight per integrand word.
    let mut weights: std::collections::BTreeMap<Permutation, Rational> = Default::default();
    for sigma in Permutation::all(n) {
        let d = sigma.descent_count();
        let c = sign(d) / Rational::from_integer(binomial(n - 1, d) * (n * n));
        for (w, positive) in right_nested_words(sigma.word()) {
            let slot = weights
                .entry(Permutation::new(w)?)
                .or_insert_with(Rational::zero);
            if positive {
                *slot += &c;
            } else {
                *slot -= &c;
            }
        }
    }
    weighted_perm_sum(a, n, false, |sigma| {
        weights.get(sigma).cloned().unwrap_or_default()
    })
}

/// `(degree-n part of Ω, its right-nested bracket form)` at `s`.
pub fn dsw_check(a: &MatPolyPath, n: usize, s: &Rational) -> Result<(ExactMatrix, ExactMatrix)> {
    let brackets = dsw_bracket_part(a, n)?;
    let direct = weighted_perm_sum(a, n, false, mps_coefficient)?;
    Ok((direct.eval(s), brackets.eval(s)))
}

/// `−½ R([R(a), a])`.
pub fn classical_degree2(a: &MatPolyPath) -> Result<MatPolyPath> {
    Ok(a.integral().commutator(a)?.integral().scale(&rat(-1, 2)))
}

/// `¼ R([R([R(a), a]), a]) + 1/12 R([R(a), [R(a), a]])`.
pub fn classical_degree3(a: &MatPolyPath) -> Result<MatPolyPath> {
    let ra = a.integral();
    let inner = ra.commutator(a)?;
    let first = inner.integral().commutator(a)?.scale(&rat(1, 4));
    let second = ra.commutator(&inner)?.scale(&rat(1, 12));
    Ok(first.add(&second)?.integral())
}

/// `exp(float(Ω_N(s)))`.
pub fn magnus_exponential(omega: &ExactMatrix) -> FloatMatrix {
    matrix_exp(&omega.to_f64())
}

/// `‖chen_reference(a, N, s) − exp(Ω_N(s))‖∞`.
pub fn spitzer_check(a: &MatPolyPath, order: usize, s: &Rational) -> Result<f64> {
    let omega = mps_omega(a, order, s)?;
    let chen = chen_reference(a, order, s)?.to_f64();
    Ok(chen.sub(&magnus_exponential(&omega)).norm_inf())
}

/// `‖exp(Ω_N(s)) − chen_reference(a, N + 6, s)‖∞`.
pub fn ode_residual(a: &MatPolyPath, order: usize, s: &Rational) -> Result<f64> {
    let omega = mps_omega(a, order, s)?;
    let reference = chen_reference(a, order + 6, s)?.to_f64();
    Ok(magnus_exponential(&omega).sub(&reference).norm_inf())
}

/// `log₂(r(sᵢ) / r(sᵢ₊₁))` for consecutive points of a residual scan.
pub fn observed_orders(points: &[(Rational, f64)]) -> Vec<f64> {
    points
        .windows(2)
        .map(|w| {
            let ratio = crate::rational::to_f64(&(&w[0].0 / &w[1].0));
            (w[0].1 / w[1].1).ln() / ratio.ln()
        })
        .collect()
}

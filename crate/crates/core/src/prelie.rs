//! Pre-Lie Magnus expansion and the group of formal flows, written once for
//! any complete filtered left pre-Lie algebra.
//!
//! Elements are truncated: every implementation drops components of
//! filtration degree above [`FilteredPreLie::trunc`]. All solvers iterate a
//! contraction `trunc` times; each pass fixes one more degree.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dendriform::{bernoulli_table, SplitConvention, TreeSeries};
use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

pub trait FilteredPreLie: Clone {
    fn trunc(&self) -> usize;
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    /// `self ▷ other`.
    fn prelie(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }
}

/// `Σ_{k≥0} L_{x▷}^k(y) / k!`.
pub fn exp_left<T: FilteredPreLie>(x: &T, y: &T) -> T {
    let mut out = y.clone();
    let mut term = y.clone();
    for k in 1..=x.trunc() {
        term = x
            .prelie(&term)
            .scale(&Rational::new(BigInt::one(), BigInt::from(k)));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    out
}

/// The pre-Lie Magnus expansion: the fixed point of
/// `Ω′ = Σ_{m≥0} (B_m/m!) L_{Ω′▷}^m(a)`.
pub fn prelie_magnus<T: FilteredPreLie>(a: &T) -> T {
    let n = a.trunc();
    let weights: Vec<Rational> = bernoulli_table(n)
        .into_iter()
        .enumerate()
        .map(|(m, b)| b / Rational::from_integer(factorial(m)))
        .collect();
    let mut omega = a.clone();
    for _ in 0..n {
        let mut next = a.zero_like();
        let mut iterate = a.clone();
        for w in weights.iter().take(n) {
            if iterate.is_zero() {
                break;
            }
            if !w.is_zero() {
                next = next.add(&iterate.scale(w));
            }
            iterate = omega.prelie(&iterate);
        }
        omega = next;
    }
    omega
}

/// `W(a) = e^{L_{a▷}}𝟙 − 𝟙 = Σ_{k≥1} L_{a▷}^{k−1}(a) / k!`.
pub fn flow_w<T: FilteredPreLie>(a: &T) -> T {
    let mut out = a.zero_like();
    let mut term = a.clone();
    for k in 1..=a.trunc() {
        if term.is_zero() {
            break;
        }
        out = out.add(&term.scale(&Rational::new(BigInt::one(), factorial(k))));
        term = a.prelie(&term);
    }
    out
}

/// The inverse of [`flow_w`], solved degree by degree.
pub fn flow_omega<T: FilteredPreLie>(b: &T) -> T {
    let mut omega = b.clone();
    for _ in 0..b.trunc() {
        omega = omega.add(&b.sub(&flow_w(&omega)));
    }
    omega
}

/// `a # b = a + e^{L_{Ω(a)▷}} b`.
pub fn sharp<T: FilteredPreLie>(a: &T, b: &T) -> T {
    a.add(&exp_left(&flow_omega(a), b))
}

/// `a^{#−1} = e^{−L_{Ω(a)▷}}𝟙 − 𝟙 = W(−Ω(a))`.
pub fn sharp_inverse<T: FilteredPreLie>(a: &T) -> T {
    flow_w(&flow_omega(a).scale(&-Rational::one()))
}

impl FilteredPreLie for TreeSeries {
    fn trunc(&self) -> usize {
        TreeSeries::trunc(self)
    }

    fn zero_like(&self) -> Self {
        TreeSeries::zero(TreeSeries::trunc(self))
    }

    fn add(&self, other: &Self) -> Self {
        self.add_unchecked(other)
    }

    fn scale(&self, c: &Rational) -> Self {
        TreeSeries::scale(self, c)
    }

    fn prelie(&self, other: &Self) -> Self {
        self.augmentation()
            .prelie(&other.augmentation().with_trunc(TreeSeries::trunc(self)))
            .expect("augmentation ideal, equal truncation")
    }

    fn is_zero(&self) -> bool {
        TreeSeries::is_zero(self)
    }
}

/// A tree series paired with the `≺`/`≻` labeling used for its pre-Lie
/// product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSeries {
    pub series: TreeSeries,
    pub convention: SplitConvention,
}

impl FilteredPreLie for LabeledSeries {
    fn trunc(&self) -> usize {
        self.series.trunc()
    }

    fn zero_like(&self) -> Self {
        LabeledSeries {
            series: TreeSeries::zero(self.series.trunc()),
            convention: self.convention,
        }
    }

    fn add(&self, other: &Self) -> Self {
        LabeledSeries {
            series: self.series.add_unchecked(&other.series),
            convention: self.convention,
        }
    }

    fn scale(&self, c: &Rational) -> Self {
        LabeledSeries {
            series: self.series.scale(c),
            convention: self.convention,
        }
    }

    fn prelie(&self, other: &Self) -> Self {
        LabeledSeries {
            series: self
                .series
                .augmentation()
                .prelie_with(&other.series.augmentation(), self.convention)
                .expect("augmentation ideal, equal truncation"),
            convention: self.convention,
        }
    }

    fn is_zero(&self) -> bool {
        self.series.is_zero()
    }
}

fn require_augmented(a: &TreeSeries) -> Result<()> {
    if a.constant_term().is_zero() {
        Ok(())
    } else {
        Err(Error::NonzeroConstantTerm)
    }
}

/// Pre-Lie Magnus expansion of a tree series.
pub fn prelie_magnus_series(a: &TreeSeries) -> Result<TreeSeries> {
    require_augmented(a)?;
    Ok(prelie_magnus(a))
}

pub fn flow_w_series(a: &TreeSeries) -> Result<TreeSeries> {
    require_augmented(a)?;
    Ok(flow_w(a))
}

pub fn flow_omega_series(b: &TreeSeries) -> Result<TreeSeries> {
    require_augmented(b)?;
    Ok(flow_omega(b))
}

pub fn sharp_series(a: &TreeSeries, b: &TreeSeries) -> Result<TreeSeries> {
    require_augmented(a)?;
    require_augmented(b)?;
    a.check_trunc(b)?;
    Ok(sharp(a, b))
}

pub fn sharp_inverse_series(a: &TreeSeries) -> Result<TreeSeries> {
    require_augmented(a)?;
    Ok(sharp_inverse(a))
}

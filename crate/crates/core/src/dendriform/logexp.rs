use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

use super::{SplitConvention, TreeSeries};

impl TreeSeries {
    /// `exp⋆(x) = Σ x^{⋆k}/k!`, for `x` without constant term.
    pub fn exp_star(&self) -> Result<TreeSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.trunc();
        let mut out = TreeSeries::one(n);
        let mut power = TreeSeries::one(n);
        for k in 1..=n {
            power = power.star(self)?;
            if power.is_zero() {
                break;
            }
            out = out.add_unchecked(&power.scale(&Rational::new(BigInt::one(), factorial(k))));
        }
        Ok(out)
    }

    /// `log⋆(u) = −Σ_{k≥1} (−1)ᵏ (u − 1)^{⋆k}/k`, for `u` with constant term 1.
    pub fn log_star(&self) -> Result<TreeSeries> {
        if !self.constant_term().is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.trunc();
        let y = self.augmentation();
        let mut out = TreeSeries::zero(n);
        let mut power = TreeSeries::one(n);
        for k in 1..=n {
            power = power.star(&y)?;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add_unchecked(&power.scale(&Rational::new(sign.into(), k.into())));
        }
        Ok(out)
    }
}

/// The solution of `X = 1 + a ≺ X`, degree by degree.
pub fn solve_left_fixpoint(a: &TreeSeries) -> Result<TreeSeries> {
    solve_left_fixpoint_with(a, SplitConvention::FirstTermPrec)
}

pub fn solve_left_fixpoint_with(a: &TreeSeries, conv: SplitConvention) -> Result<TreeSeries> {
    if !a.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let one = TreeSeries::one(a.trunc());
    let mut x = one.clone();
    // each pass fixes at least one more degree
    for _ in 0..a.trunc() {
        x = one.add_unchecked(&a.prec_with(&x, conv)?);
    }
    Ok(x)
}

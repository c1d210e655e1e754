use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// A univariate polynomial `Σ cₖ tᵏ` with exact rational coefficients.
/// Trailing zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `tᵏ`.
    pub fn monomial(k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        Poly(v)
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.0.get(i), other.0.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// `∫₀ᵗ p`.
    pub fn antiderivative(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(Rational::zero());
        for (k, c) in self.0.iter().enumerate() {
            out.push(c / Rational::from_integer(BigInt::from(k + 1)));
        }
        Poly::new(out)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, s: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * s + c)
    }

    /// Drops every coefficient of degree `k` or more.
    pub fn truncate_below(&self, k: usize) -> Poly {
        Poly::new(self.0.iter().take(k).cloned().collect())
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn integrate_powers() {
        assert_eq!(Poly::constant(int(1)).antiderivative(), Poly::monomial(1));
        for k in 0..6 {
            assert_eq!(
                Poly::monomial(k).antiderivative(),
                Poly::monomial(k + 1).scale(&rat(1, k as i64 + 1))
            );
        }
        assert_eq!(
            Poly::monomial(3).antiderivative().derivative(),
            Poly::monomial(3)
        );
    }

    #[test]
    fn arithmetic() {
        let p = Poly::new(vec![int(1), int(-1)]);
        let q = Poly::new(vec![int(1), int(1)]);
        assert_eq!(p.mul(&q), Poly::new(vec![int(1), int(0), int(-1)]));
        assert_eq!(p.add(&q), Poly::constant(int(2)));
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.mul(&q).eval(&rat(1, 2)), rat(3, 4));
        assert_eq!(Poly::new(vec![int(0), int(0)]).degree(), None);
    }
}

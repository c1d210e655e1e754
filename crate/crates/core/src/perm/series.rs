use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::{shuffle_set, Permutation, ShuffleKind};

/// A truncated element of `⊕_{n≥0} k[Sₙ]`. The degree-0 part is a multiple of
/// the empty permutation and is kept as [`PermSeries::unit`].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PermSeries {
    trunc: usize,
    unit: Rational,
    terms: BTreeMap<Permutation, Rational>,
}

impl PermSeries {
    pub fn zero(trunc: usize) -> Self {
        PermSeries {
            trunc,
            unit: Rational::zero(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: usize) -> Self {
        PermSeries {
            unit: Rational::one(),
            ..Self::zero(trunc)
        }
    }

    pub fn from_perm(p: Permutation, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(p, Rational::one());
        s
    }

    pub fn from_terms<I>(trunc: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Permutation, Rational)>,
    {
        let mut s = Self::zero(trunc);
        for (p, c) in terms {
            s.add_term(p, c);
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn unit(&self) -> &Rational {
        &self.unit
    }

    pub fn add_term(&mut self, p: Permutation, c: Rational) {
        if p.len() > self.trunc || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn coefficient(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty() && self.unit.is_zero()
    }

    /// Sum of all coefficients of non-empty permutations.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().cloned().sum()
    }

    fn check_trunc(&self, other: &PermSeries) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(Error::TruncationMismatch {
                left: self.trunc,
                right: other.trunc,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &PermSeries) -> Result<PermSeries> {
        self.check_trunc(other)?;
        let mut out = self.clone();
        out.unit += &other.unit;
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> PermSeries {
        PermSeries::from_terms(
            self.trunc,
            self.terms.iter().map(|(p, v)| (p.clone(), v * c)),
        )
        .with_unit(&self.unit * c)
    }

    fn with_unit(mut self, unit: Rational) -> Self {
        self.unit = unit;
        self
    }

    /// `σ ≺ τ = Σ_{ω ∈ Sh²} ω ∘ (σ × τ)`, on the augmentation ideal.
    pub fn prec(&self, other: &PermSeries) -> Result<PermSeries> {
        self.half(other, ShuffleKind::Sh2)
    }

    /// `σ ≻ τ = Σ_{ω ∈ Sh¹} ω ∘ (σ × τ)`, on the augmentation ideal.
    pub fn succ(&self, other: &PermSeries) -> Result<PermSeries> {
        self.half(other, ShuffleKind::Sh1)
    }

    /// The shuffle product `σ ⋆ τ = Σ_{ω ∈ Sh} ω ∘ (σ × τ)`, unital.
    pub fn star(&self, other: &PermSeries) -> Result<PermSeries> {
        self.check_trunc(other)?;
        let mut out = self.product(other, ShuffleKind::All)?;
        out.unit = &self.unit * &other.unit;
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c * &self.unit);
        }
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c * &other.unit);
        }
        Ok(out)
    }

    fn half(&self, other: &PermSeries, kind: ShuffleKind) -> Result<PermSeries> {
        self.check_trunc(other)?;
        if !self.unit.is_zero() || !other.unit.is_zero() {
            return Err(Error::UnitHalfProduct);
        }
        self.product(other, kind)
    }

    fn product(&self, other: &PermSeries, kind: ShuffleKind) -> Result<PermSeries> {
        let mut out = PermSeries::zero(self.trunc);
        let mut shuffles: BTreeMap<(usize, usize), Vec<Permutation>> = BTreeMap::new();
        for (s, cs) in &self.terms {
            for (t, ct) in &other.terms {
                let (n, m) = (s.len(), t.len());
                if n + m > self.trunc {
                    continue;
                }
                let omegas = match shuffles.entry((n, m)) {
                    std::collections::btree_map::Entry::Occupied(o) => o.into_mut(),
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(shuffle_set(n, m, kind)?)
                    }
                };
                let joined = s.concat(t);
                let c = cs * ct;
                for omega in omegas.iter() {
                    out.add_term(omega.compose(&joined), c.clone());
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for PermSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.unit.is_zero() {
            write!(f, "({})()", self.unit)?;
            first = false;
        }
        for (p, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "({c}){p}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PermSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermSeries[N={}]({self})", self.trunc)
    }
}

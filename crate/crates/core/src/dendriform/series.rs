use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::RootedTree;
use crate::rational::Rational;

/// A truncated graded linear combination of planar rooted trees.
///
/// The coefficient of a degree-`n` tree plays the role of the `λⁿ`
/// coefficient. Terms above `trunc` are dropped on insertion; zero
/// coefficients are never stored. The vertex `•` carries the constant term.
#[derive(Clone, PartialEq, Eq)]
pub struct TreeSeries {
    trunc: usize,
    terms: BTreeMap<RootedTree, Rational>,
}

impl TreeSeries {
    pub fn zero(trunc: usize) -> Self {
        TreeSeries {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1 = •`.
    pub fn one(trunc: usize) -> Self {
        Self::from_tree(RootedTree::vertex(), trunc)
    }

    pub fn from_tree(tree: RootedTree, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(tree, Rational::one());
        s
    }

    pub fn from_terms<I>(trunc: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (RootedTree, Rational)>,
    {
        let mut s = Self::zero(trunc);
        for (t, c) in terms {
            s.add_term(t, c);
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Adds `c·tree`, dropping it above the truncation degree.
    pub fn add_term(&mut self, tree: RootedTree, c: Rational) {
        if tree.degree() > self.trunc || c.is_zero() {
            return;
        }
        match self.terms.entry(tree) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, tree: &RootedTree) -> Rational {
        self.terms.get(tree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&RootedTree::vertex())
    }

    /// Terms in canonical tree order.
    pub fn terms(&self) -> impl Iterator<Item = (&RootedTree, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The homogeneous component of degree `n`.
    pub fn degree_part(&self, n: usize) -> TreeSeries {
        Self::from_terms(
            self.trunc,
            self.terms
                .iter()
                .filter(|(t, _)| t.degree() == n)
                .map(|(t, c)| (t.clone(), c.clone())),
        )
    }

    /// The series without its constant term.
    pub fn augmentation(&self) -> TreeSeries {
        let mut s = self.clone();
        s.terms.remove(&RootedTree::vertex());
        s
    }

    /// Same terms, truncated at `trunc` (which may be lower or higher).
    pub fn with_trunc(&self, trunc: usize) -> TreeSeries {
        Self::from_terms(
            trunc,
            self.terms.iter().map(|(t, c)| (t.clone(), c.clone())),
        )
    }

    pub(crate) fn check_trunc(&self, other: &TreeSeries) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(Error::TruncationMismatch {
                left: self.trunc,
                right: other.trunc,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TreeSeries) -> Result<TreeSeries> {
        self.check_trunc(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &TreeSeries) -> Result<TreeSeries> {
        self.check_trunc(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub(crate) fn add_unchecked(&self, other: &TreeSeries) -> TreeSeries {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TreeSeries {
        if c.is_zero() {
            return Self::zero(self.trunc);
        }
        TreeSeries {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(t, v)| (t.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> TreeSeries {
        self.scale(&-Rational::one())
    }

    /// Maximum degree of a stored term.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(RootedTree::degree).max()
    }
}

impl fmt::Display for TreeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "({c}){t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TreeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreeSeries[N={}]({self})", self.trunc)
    }
}

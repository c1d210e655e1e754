use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}`, `n ≥ 1`, in one-line notation.
///
/// Ordered by size first, then lexicographically on the word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::NotPermutation("empty word".into()));
        }
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotPermutation(format!("{word:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&i| self.apply(i)).collect())
    }

    /// `σ × τ`: `σ` on the first `n` letters, `τ` shifted by `n` on the rest.
    pub fn concat(&self, other: &Permutation) -> Permutation {
        let n = self.len();
        Permutation(
            self.0
                .iter()
                .copied()
                .chain(other.0.iter().map(|&x| x + n))
                .collect(),
        )
    }

    /// Positions `i` (1-based) with `σ(i) > σ(i+1)`.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    pub fn descent_count(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// All of `Sₙ` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        if n == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(word.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n - 1).rev().find(|&i| word[i] < word[i + 1]) else {
                break;
            };
            let j = (i + 1..n)
                .rev()
                .find(|&j| word[j] > word[i])
                .expect("pivot");
            word.swap(i, j);
            word[i + 1..].reverse();
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.0.clone())
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Invalid(format!("not a permutation: {value}")))?;
        let word = items
            .iter()
            .map(|v| {
                v.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Invalid(format!("not a letter: {v}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }
}

/// The order-isomorphic permutation of a word with distinct entries.
pub fn standardize(word: &[i64]) -> Result<Permutation> {
    let mut sorted: Vec<i64> = word.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateEntry(w[0]));
    }
    if word.is_empty() {
        return Err(Error::NotPermutation("empty word".into()));
    }
    Ok(Permutation(
        word.iter()
            .map(|x| sorted.binary_search(x).expect("present") + 1)
            .collect(),
    ))
}

pub(crate) fn standardize_letters(word: &[usize]) -> Vec<usize> {
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    word.iter()
        .map(|x| sorted.binary_search(x).expect("present") + 1)
        .collect()
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() > 9 { " " } else { "" };
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

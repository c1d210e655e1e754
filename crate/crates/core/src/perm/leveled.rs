use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::forest::{BinaryTree, LeveledBinaryTree};
use crate::rational::{binomial, sign, Rational};

use super::permutation::standardize_letters;
use super::{PermSeries, Permutation};

/// Tree underlying a word of distinct letters: split at the maximal letter,
/// standardize both sides, recurse and graft with `∨`.
fn tree_of_word(word: &[usize]) -> BinaryTree {
    if word.is_empty() {
        return BinaryTree::leaf();
    }
    let top = word
        .iter()
        .enumerate()
        .max_by_key(|(_, &x)| x)
        .map(|(i, _)| i)
        .expect("non-empty");
    let left = standardize_letters(&word[..top]);
    let right = standardize_letters(&word[top + 1..]);
    BinaryTree::graft(&tree_of_word(&left), &tree_of_word(&right))
}

/// `P⁻¹(σ)`: the leveled tree whose `i`-th internal vertex (infix order) sits
/// at level `σ(i)`.
pub fn perm_to_leveled(sigma: &Permutation) -> LeveledBinaryTree {
    LeveledBinaryTree::new(tree_of_word(sigma.word()), sigma.word().to_vec())
        .expect("split-at-maximum always yields a valid level map")
}

/// `P(t, φ)`: read the levels of the internal vertices left to right.
pub fn leveled_to_perm(lt: &LeveledBinaryTree) -> Result<Permutation> {
    if lt.tree().degree() == 0 {
        return Err(Error::InvalidLevels("tree has no internal vertex".into()));
    }
    Permutation::new(lt.levels().to_vec())
}

/// `ψ(σ)`: [`perm_to_leveled`] with the levels forgotten.
pub fn psi(sigma: &Permutation) -> BinaryTree {
    tree_of_word(sigma.word())
}

/// The fiber `ψ⁻¹(t)` in lexicographic order, generated directly as the
/// decreasing labelings of `t`.
pub fn psi_fiber(t: &BinaryTree) -> Vec<Permutation> {
    fn words(t: &BinaryTree) -> Vec<Vec<usize>> {
        let Some((l, r)) = t.split() else {
            return vec![Vec::new()];
        };
        let (nl, nr) = (l.degree(), r.degree());
        let n = nl + nr + 1;
        let (lw, rw) = (words(l), words(r));
        let mut out = Vec::new();
        // choose which of 1..n-1 go to the left subtree
        for chosen in combinations(n - 1, nl) {
            let mut in_left = vec![false; n];
            for &c in &chosen {
                in_left[c] = true;
            }
            let right_vals: Vec<usize> = (1..n).filter(|&v| !in_left[v]).collect();
            for a in &lw {
                for b in &rw {
                    let mut w: Vec<usize> = a.iter().map(|&i| chosen[i - 1]).collect();
                    w.push(n);
                    w.extend(b.iter().map(|&i| right_vals[i - 1]));
                    out.push(w);
                }
            }
        }
        out
    }
    if t.degree() == 0 {
        return Vec::new();
    }
    let mut out: Vec<Permutation> = words(t)
        .into_iter()
        .map(Permutation::from_word_unchecked)
        .collect();
    out.sort();
    out
}

/// Increasing `k`-subsets of `{1, …, n}`, lexicographic.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// `ψ*(t) = Σ_{ψ(σ) = t} σ`.
pub fn psi_star(t: &BinaryTree, trunc: usize) -> Result<PermSeries> {
    if t.degree() == 0 {
        return Err(Error::DegreeZero("permutation image"));
    }
    Ok(PermSeries::from_terms(
        trunc,
        psi_fiber(t).into_iter().map(|p| (p, Rational::one())),
    ))
}

/// `(−1)^{d(σ)} / (n·C(n−1, d(σ)))`.
pub fn mps_coefficient(sigma: &Permutation) -> Rational {
    let n = sigma.len();
    let d = sigma.descent_count();
    sign(d) / Rational::from_integer(BigInt::from(n) * binomial(n - 1, d))
}

//! The dendriform algebra on `⊕ₙ k[Sₙ]` given by splitting shuffles, and its
//! link to planar binary trees through leveled trees.

mod leveled;
mod permutation;
mod series;

pub use leveled::{leveled_to_perm, mps_coefficient, perm_to_leveled, psi, psi_fiber, psi_star};
pub use permutation::{standardize, Permutation};
pub use series::PermSeries;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShuffleKind {
    All,
    /// `ω(n+m) = n+m`.
    Sh1,
    /// `ω(n) = n+m`.
    Sh2,
}

/// The `(n, m)`-shuffles `ω` (increasing on `1..=n` and on `n+1..=n+m`),
/// filtered by `kind`, in lexicographic order.
pub fn shuffle_set(n: usize, m: usize, kind: ShuffleKind) -> Result<Vec<Permutation>> {
    if kind != ShuffleKind::All && (n == 0 || m == 0) {
        return Err(Error::OutOfRange(format!(
            "split shuffles need n, m ≥ 1, got ({n}, {m})"
        )));
    }
    let total = n + m;
    let mut out = Vec::new();
    if total == 0 {
        return Ok(out);
    }
    for first in leveled::combinations(total, n) {
        let mut in_first = vec![false; total + 1];
        for &v in &first {
            in_first[v] = true;
        }
        let keep = match kind {
            ShuffleKind::All => true,
            ShuffleKind::Sh1 => !in_first[total],
            ShuffleKind::Sh2 => in_first[total],
        };
        if !keep {
            continue;
        }
        let mut word = first;
        word.extend((1..=total).filter(|&v| !in_first[v]));
        out.push(Permutation::new(word)?);
    }
    out.sort();
    Ok(out)
}

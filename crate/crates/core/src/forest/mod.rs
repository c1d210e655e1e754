//! Planar binary trees, planar rooted trees and the rotation correspondence
//! between them.

mod binary;
mod rooted;

pub use binary::BinaryTree;
pub use rooted::RootedTree;

use crate::error::{Error, Result};

/// Rotation correspondence: `| ↦ •` and `t₁ ∨ t₂ ↦ rotate(t₁) ↘ rotate(t₂)`.
pub fn rotate(t: &BinaryTree) -> RootedTree {
    match t.split() {
        None => RootedTree::vertex(),
        Some((l, r)) => rotate(l).left_butcher(&rotate(r)),
    }
}

/// Inverse of [`rotate`]: `B₊(t₁ t₂ ⋯ t_n) ↦ unrotate(t₁) ∨ unrotate(B₊(t₂ ⋯ t_n))`.
pub fn unrotate(t: &RootedTree) -> BinaryTree {
    // fold the children from the right so no intermediate rooted trees are built
    t.children()
        .iter()
        .rev()
        .fold(BinaryTree::leaf(), |acc, child| {
            BinaryTree::graft(&unrotate(child), &acc)
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeKind {
    Binary,
    Rooted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Ladder,
    Corolla,
    LeftComb,
    RightComb,
}

/// Either kind of tree; returned by [`family`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Binary(BinaryTree),
    Rooted(RootedTree),
}

impl std::fmt::Display for Tree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tree::Binary(t) => t.fmt(f),
            Tree::Rooted(t) => t.fmt(f),
        }
    }
}

pub fn family(kind: Family, n: usize) -> Tree {
    match kind {
        Family::Ladder => Tree::Rooted(RootedTree::ladder(n)),
        Family::Corolla => Tree::Rooted(RootedTree::corolla(n)),
        Family::LeftComb => Tree::Binary(BinaryTree::left_comb(n)),
        Family::RightComb => Tree::Binary(BinaryTree::right_comb(n)),
    }
}

pub fn enumerate(kind: TreeKind, n: usize) -> Vec<Tree> {
    match kind {
        TreeKind::Binary => BinaryTree::enumerate(n)
            .into_iter()
            .map(Tree::Binary)
            .collect(),
        TreeKind::Rooted => RootedTree::enumerate(n)
            .into_iter()
            .map(Tree::Rooted)
            .collect(),
    }
}

pub fn parse(kind: TreeKind, text: &str) -> Result<Tree> {
    match kind {
        TreeKind::Binary => BinaryTree::parse(text).map(Tree::Binary),
        TreeKind::Rooted => RootedTree::parse(text).map(Tree::Rooted),
    }
}

/// An ordered composition of `n`: a non-empty tuple of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Invalid(format!("not a composition: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All compositions of `n ≥ 1`, `2ⁿ⁻¹` of them, in lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(prefix.clone()));
                return;
            }
            for first in 1..=rest {
                prefix.push(first);
                rec(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// A planar binary tree with a bijective level map on its internal vertices.
///
/// `levels[i]` is the level of the `i`-th internal vertex in infix order, the
/// vertex sitting between leaves `i + 1` and `i + 2`. Every vertex sits at a
/// higher level than all vertices above it, so the root carries level `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeveledBinaryTree {
    tree: BinaryTree,
    levels: Vec<usize>,
}

impl LeveledBinaryTree {
    pub fn new(tree: BinaryTree, levels: Vec<usize>) -> Result<Self> {
        let n = tree.degree();
        if levels.len() != n {
            return Err(Error::InvalidLevels(format!(
                "{} levels for {} internal vertices",
                levels.len(),
                n
            )));
        }
        let mut seen = vec![false; n + 1];
        for &l in &levels {
            if l == 0 || l > n || seen[l] {
                return Err(Error::InvalidLevels(format!(
                    "{levels:?} is not a bijection onto 1..={n}"
                )));
            }
            seen[l] = true;
        }
        // returns the maximum level inside the subtree
        fn check(t: &BinaryTree, levels: &[usize], offset: usize) -> Result<usize> {
            let Some((l, r)) = t.split() else {
                return Ok(0);
            };
            let at = offset + l.degree();
            let own = levels[at];
            let below = check(l, levels, offset)?.max(check(r, levels, at + 1)?);
            if below >= own {
                return Err(Error::InvalidLevels(format!(
                    "vertex {at} at level {own} is not above its subtrees"
                )));
            }
            Ok(own)
        }
        check(&tree, &levels, 0)?;
        Ok(LeveledBinaryTree { tree, levels })
    }

    pub fn tree(&self) -> &BinaryTree {
        &self.tree
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }
}

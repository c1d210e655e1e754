use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A planar binary tree: either the leaf `|` or a grafting `l ∨ r`.
///
/// Trees are immutable and cheap to clone. Equality, hashing and ordering go
/// through the canonical serialization (`.` for the leaf, `(L R)` for a node),
/// ordered first by degree.
#[derive(Clone)]
pub struct BinaryTree(Arc<Node>);

struct Node {
    branches: Option<(BinaryTree, BinaryTree)>,
    degree: usize,
    code: Box<str>,
}

impl BinaryTree {
    pub fn leaf() -> Self {
        BinaryTree(Arc::new(Node {
            branches: None,
            degree: 0,
            code: ".".into(),
        }))
    }

    /// The grafting `left ∨ right`.
    pub fn graft(left: &BinaryTree, right: &BinaryTree) -> Self {
        let code = format!("({} {})", left.0.code, right.0.code);
        BinaryTree(Arc::new(Node {
            degree: left.degree() + right.degree() + 1,
            branches: Some((left.clone(), right.clone())),
            code: code.into(),
        }))
    }

    /// The generator `Y = | ∨ |`.
    pub fn y() -> Self {
        Self::graft(&Self::leaf(), &Self::leaf())
    }

    pub fn is_leaf(&self) -> bool {
        self.0.branches.is_none()
    }

    /// Number of internal vertices.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn leaf_count(&self) -> usize {
        self.degree() + 1
    }

    /// The unique decomposition `t = l ∨ r`, or `None` for the leaf.
    pub fn split(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        self.0.branches.as_ref().map(|(l, r)| (l, r))
    }

    pub fn code(&self) -> &str {
        &self.0.code
    }

    /// Number of non-leftmost leaves that are left children.
    pub fn descent_count(&self) -> usize {
        fn left_leaves(t: &BinaryTree, is_left: bool) -> usize {
            match t.split() {
                None => usize::from(is_left),
                Some((l, r)) => left_leaves(l, true) + left_leaves(r, false),
            }
        }
        match self.split() {
            None => 0,
            Some(_) => left_leaves(self, false) - 1,
        }
    }

    /// `τ_r^(n)`: `τ_r^(0) = |`, `τ_r^(n+1) = | ∨ τ_r^(n)`.
    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(Self::leaf(), |acc, _| Self::graft(&Self::leaf(), &acc))
    }

    /// `τ_l^(n)`: `τ_l^(0) = |`, `τ_l^(n+1) = τ_l^(n) ∨ |`.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(Self::leaf(), |acc, _| Self::graft(&acc, &Self::leaf()))
    }

    /// All trees of degree `n`, in canonical order.
    pub fn enumerate(n: usize) -> Vec<BinaryTree> {
        let mut by_degree: Vec<Vec<BinaryTree>> = vec![vec![Self::leaf()]];
        for d in 1..=n {
            let mut trees = Vec::new();
            for i in 0..d {
                for l in &by_degree[i] {
                    for r in &by_degree[d - 1 - i] {
                        trees.push(Self::graft(l, r));
                    }
                }
            }
            trees.sort();
            by_degree.push(trees);
        }
        by_degree.swap_remove(n)
    }

    /// Parses the grammar `B := "." | "(" B " " B ")"`.
    pub fn parse(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let tree = parse_binary(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse {
                offset: pos,
                message: "trailing input".into(),
            });
        }
        Ok(tree)
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self.split() {
            None => serde_json::Value::Null,
            Some((l, r)) => serde_json::Value::Array(vec![l.to_json(), r.to_json()]),
        }
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        match value {
            serde_json::Value::Null => Ok(Self::leaf()),
            serde_json::Value::Array(items) if items.len() == 2 => Ok(Self::graft(
                &Self::from_json(&items[0])?,
                &Self::from_json(&items[1])?,
            )),
            other => Err(Error::Invalid(format!("not a binary tree: {other}"))),
        }
    }
}

fn parse_binary(bytes: &[u8], pos: &mut usize) -> Result<BinaryTree> {
    let err = |offset: usize, message: &str| Error::Parse {
        offset,
        message: message.into(),
    };
    match bytes.get(*pos) {
        Some(b'.') => {
            *pos += 1;
            Ok(BinaryTree::leaf())
        }
        Some(b'(') => {
            *pos += 1;
            let left = parse_binary(bytes, pos)?;
            if bytes.get(*pos) != Some(&b' ') {
                return Err(err(*pos, "expected ' '"));
            }
            *pos += 1;
            let right = parse_binary(bytes, pos)?;
            if bytes.get(*pos) != Some(&b')') {
                return Err(err(*pos, "expected ')'"));
            }
            *pos += 1;
            Ok(BinaryTree::graft(&left, &right))
        }
        Some(_) => Err(err(*pos, "expected '.' or '('")),
        None => Err(err(*pos, "unexpected end of input")),
    }
}

impl PartialEq for BinaryTree {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.code == other.0.code
    }
}

impl Eq for BinaryTree {}

impl Hash for BinaryTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.code.hash(state);
    }
}

impl Ord for BinaryTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.code.cmp(&other.0.code))
    }
}

impl PartialOrd for BinaryTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.code)
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryTree({})", self.0.code)
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::Composition;

/// A planar rooted tree `B₊(t₁ ⋯ t_p)`, graded by its number of edges.
///
/// The single vertex `•` (no children) has degree 0 and doubles as the unit of
/// the dendriform algebra on rooted trees. Canonical serialization is the
/// bracket string, e.g. `[]` for `•` and `[[][]]` for the corolla `c⁽²⁾`.
#[derive(Clone)]
pub struct RootedTree(Arc<Node>);

struct Node {
    children: Vec<RootedTree>,
    degree: usize,
    code: Box<str>,
}

impl RootedTree {
    /// The single-vertex tree `•`.
    pub fn vertex() -> Self {
        Self::from_children(Vec::new())
    }

    /// `B₊(children)`.
    pub fn from_children(children: Vec<RootedTree>) -> Self {
        let degree = children.iter().map(|c| c.degree() + 1).sum();
        let mut code = String::with_capacity(2 * degree + 2);
        code.push('[');
        for c in &children {
            code.push_str(c.code());
        }
        code.push(']');
        RootedTree(Arc::new(Node {
            children,
            degree,
            code: code.into(),
        }))
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.0.children
    }

    pub fn is_vertex(&self) -> bool {
        self.0.children.is_empty()
    }

    /// Number of edges.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn code(&self) -> &str {
        &self.0.code
    }

    /// Number of childless vertices; `L(•) = 1`.
    pub fn leaf_count(&self) -> usize {
        if self.is_vertex() {
            1
        } else {
            self.children().iter().map(RootedTree::leaf_count).sum()
        }
    }

    /// Left Butcher product `self ↘ u = B₊(self u₁ ⋯ u_p)`.
    pub fn left_butcher(&self, u: &RootedTree) -> RootedTree {
        let mut children = Vec::with_capacity(u.children().len() + 1);
        children.push(self.clone());
        children.extend_from_slice(u.children());
        Self::from_children(children)
    }

    /// The unique decomposition `τ = τ₁ ↘ τ₂`, or `None` for `•`.
    pub fn split(&self) -> Option<(RootedTree, RootedTree)> {
        let (first, rest) = self.children().split_first()?;
        Some((first.clone(), Self::from_children(rest.to_vec())))
    }

    /// `ℓ⁽⁰⁾ = •`, `ℓ⁽ⁿ⁺¹⁾ = ℓ⁽ⁿ⁾ ↘ •`.
    pub fn ladder(n: usize) -> Self {
        (0..n).fold(Self::vertex(), |acc, _| acc.left_butcher(&Self::vertex()))
    }

    /// `c⁽⁰⁾ = •`, `c⁽ⁿ⁺¹⁾ = • ↘ c⁽ⁿ⁾`.
    pub fn corolla(n: usize) -> Self {
        (0..n).fold(Self::vertex(), |acc, _| Self::vertex().left_butcher(&acc))
    }

    /// All trees of degree `n`, in canonical order.
    pub fn enumerate(n: usize) -> Vec<RootedTree> {
        let mut by_degree: Vec<Vec<RootedTree>> = vec![vec![Self::vertex()]];
        for d in 1..=n {
            let mut trees = Vec::new();
            for i in 0..d {
                for first in &by_degree[i] {
                    for rest in &by_degree[d - 1 - i] {
                        trees.push(first.left_butcher(rest));
                    }
                }
            }
            trees.sort();
            by_degree.push(trees);
        }
        by_degree.swap_remove(n)
    }

    /// The ordered composition `(i₁, …, i_k)` of the degree attached to the
    /// leaves: `i_k` is the height of the rightmost leaf and `i_s` the
    /// distance from leaf `s` down to its meeting point with leaf `s + 1`.
    pub fn composition(&self) -> Result<Composition> {
        if self.is_vertex() {
            return Err(Error::DegreeZero("leaf composition"));
        }
        // root-to-leaf paths as child-index sequences, leaves left to right
        fn walk(t: &RootedTree, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if t.is_vertex() {
                out.push(path.clone());
            }
            for (i, c) in t.children().iter().enumerate() {
                path.push(i);
                walk(c, path, out);
                path.pop();
            }
        }
        let mut paths = Vec::new();
        walk(self, &mut Vec::new(), &mut paths);
        let mut parts = Vec::with_capacity(paths.len());
        for pair in paths.windows(2) {
            let shared = pair[0]
                .iter()
                .zip(&pair[1])
                .take_while(|(a, b)| a == b)
                .count();
            parts.push(pair[0].len() - shared);
        }
        parts.push(paths.last().map_or(0, Vec::len));
        Composition::new(parts)
    }

    /// Parses the grammar `T := "[" T* "]"`.
    pub fn parse(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let tree = parse_rooted(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse {
                offset: pos,
                message: "trailing input".into(),
            });
        }
        Ok(tree)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.children().iter().map(Self::to_json).collect())
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        match value {
            serde_json::Value::Array(items) => Ok(Self::from_children(
                items.iter().map(Self::from_json).collect::<Result<_>>()?,
            )),
            other => Err(Error::Invalid(format!("not a rooted tree: {other}"))),
        }
    }
}

fn parse_rooted(bytes: &[u8], pos: &mut usize) -> Result<RootedTree> {
    match bytes.get(*pos) {
        Some(b'[') => *pos += 1,
        Some(_) => {
            return Err(Error::Parse {
                offset: *pos,
                message: "expected '['".into(),
            })
        }
        None => {
            return Err(Error::Parse {
                offset: *pos,
                message: "unexpected end of input".into(),
            })
        }
    }
    let mut children = Vec::new();
    loop {
        match bytes.get(*pos) {
            Some(b']') => {
                *pos += 1;
                return Ok(RootedTree::from_children(children));
            }
            Some(b'[') => children.push(parse_rooted(bytes, pos)?),
            Some(_) => {
                return Err(Error::Parse {
                    offset: *pos,
                    message: "expected '[' or ']'".into(),
                })
            }
            None => {
                return Err(Error::Parse {
                    offset: *pos,
                    message: "unexpected end of input".into(),
                })
            }
        }
    }
}

impl PartialEq for RootedTree {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.code == other.0.code
    }
}

impl Eq for RootedTree {}

impl Hash for RootedTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.code.hash(state);
    }
}

impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.code.cmp(&other.0.code))
    }
}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.code)
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootedTree({})", self.0.code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RootedTree {
        RootedTree::parse(s).unwrap()
    }

    #[test]
    fn butcher_examples() {
        let dot = RootedTree::vertex();
        assert_eq!(dot.left_butcher(&dot), RootedTree::ladder(1));
        assert_eq!(
            RootedTree::ladder(1).left_butcher(&dot),
            RootedTree::ladder(2)
        );
        assert_eq!(dot.left_butcher(&RootedTree::corolla(1)), t("[[][]]"));
        assert_eq!(RootedTree::corolla(3), t("[[][][]]"));
        assert_eq!(RootedTree::ladder(0), dot);
    }

    #[test]
    fn leaf_counts() {
        for n in 0..7 {
            assert_eq!(RootedTree::ladder(n).leaf_count(), 1);
        }
        for n in 1..7 {
            assert_eq!(RootedTree::corolla(n).leaf_count(), n);
        }
    }

    #[test]
    fn compositions() {
        assert_eq!(RootedTree::ladder(4).composition().unwrap().parts(), &[4]);
        assert_eq!(
            RootedTree::corolla(4).composition().unwrap().parts(),
            &[1, 1, 1, 1]
        );
        assert_eq!(t("[[[]][]]").composition().unwrap().parts(), &[2, 1]);
        assert_eq!(t("[[][[]]]").composition().unwrap().parts(), &[1, 2]);
        assert!(RootedTree::vertex().composition().is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            RootedTree::parse("[[]"),
            Err(Error::Parse { offset: 3, .. })
        ));
        assert!(matches!(
            RootedTree::parse("[]]"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            RootedTree::parse("[x]"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            RootedTree::parse(""),
            Err(Error::Parse { offset: 0, .. })
        ));
    }

    #[test]
    fn json_form() {
        let c2 = t("[[][]]");
        assert_eq!(c2.to_json().to_string(), "[[],[]]");
        assert_eq!(RootedTree::from_json(&c2.to_json()).unwrap(), c2);
    }
}

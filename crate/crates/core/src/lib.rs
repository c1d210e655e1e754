//! Exact computer algebra for the Magnus expansion.
//!
//! Three independent descriptions of the Magnus element are implemented and
//! cross-checked:
//!
//! * the free dendriform algebra on planar rooted trees, with the closed
//!   leaf-count coefficient formula ([`dendriform`]);
//! * the shuffle dendriform algebra on permutations with the descent formula
//!   ([`perm`]);
//! * exact iterated integrals of matrix-valued polynomial paths ([`path`],
//!   [`magnus`]).

pub mod dendriform;
pub mod error;
pub mod forest;
pub mod linalg;
pub mod numeric;
pub mod path;
pub mod perm;
pub mod prelie;
pub mod rational;
pub mod verify;

pub use dendriform::{SplitConvention, TreeSeries};
pub use error::{Error, Result};
pub use forest::{rotate, unrotate, BinaryTree, Composition, LeveledBinaryTree, RootedTree};
pub use rational::Rational;

//! Exact free Lie algebra on two generators.
//!
//! Basis: Lyndon words over `E < F` with standard-factorization bracketing.
//! Coefficients are arbitrary-precision rationals and every element is a
//! truncated series (see [`LieElement`]).

mod algebra;
mod counting;
mod element;
mod tree;
mod word;

pub use algebra::{rewrite_to_basis, FreeLieAlgebra};
pub use counting::{bigraded_dimension, witt_dimension, MAX_COUNTED_DEGREE};
pub use element::{Degree, LieElement};
pub use tree::{BracketTree, LieExpression};
pub use word::{is_lyndon, lyndon_basis, lyndon_words_with_bidegree, Generator, LyndonWord};

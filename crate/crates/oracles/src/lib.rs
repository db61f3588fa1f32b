//! Brute-force reference computations for the test suites.
//!
//! Nothing here shares code with `unip-core`. Words are byte strings over
//! `{0, 1}` with `0 = e < 1 = f`.
//!
//! * [`words`]: Lyndon words by exhaustive filtering.
//! * [`assoc`]: Lie polynomials inside the free associative algebra, with
//!   Lyndon-basis expansion by triangular elimination.
//! * [`magma`]: the free magma algebra modulo antisymmetry and the ideal
//!   generated by Jacobi, with exact rank computations.

pub mod assoc;
pub mod magma;
pub mod words;

pub type Q = num_rational::BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

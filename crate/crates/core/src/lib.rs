//! Exact computations around the quotient `W = L / L_{>=2,>=2}` of the free
//! Lie algebra `L` on two generators `e`, `f`, together with the character
//! bookkeeping of its graded pieces and a dimension ledger comparing global
//! and local Selmer varieties of its nilpotent quotients `W_n`.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;

pub mod error;
pub mod freelie;
pub mod galois;
mod linalg;
pub mod selmer;
pub mod wquotient;

pub use error::{LedgerError, LieError};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

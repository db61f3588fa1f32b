//! Galois bookkeeping on `L` and `W`: formal characters `chi^a chibar^b`,
//! the leading-term behaviour of automorphisms `e -> c e + z`,
//! `f -> cbar f + z'`, and complex conjugation as the generator swap.

mod automorphism;
mod character;
pub mod sampling;
mod sigma;

pub use automorphism::{
    apply_homomorphism, check_leading_term, LeadingTermReport, LieAutomorphism,
};
pub use character::{character_of_graded_piece, dual_twist, CharacterLabel, GradedModuleLabel};
pub use sigma::{minus_eigenspace_dimension, sigma_involution, sigma_matrix_on_w, MATRIX_LEVELS};

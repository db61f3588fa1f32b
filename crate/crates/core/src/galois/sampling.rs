//! Seeded random sampling of Lie elements and automorphisms for exact
//! property checks. All randomness comes from the caller's generator.

use alloc::vec::Vec;

use rand::Rng;

use super::LieAutomorphism;
use crate::freelie::{lyndon_basis, FreeLieAlgebra, LieElement, LyndonWord};
use crate::Rational;

/// Lyndon words by degree, enumerated once for repeated sampling.
#[derive(Clone, Debug)]
pub struct WordPool {
    by_degree: Vec<Vec<LyndonWord>>,
}

impl WordPool {
    pub fn new(max_degree: usize) -> Self {
        let by_degree = (1..=max_degree)
            .map(|d| lyndon_basis(d).expect("degree is positive"))
            .collect();
        Self { by_degree }
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len()
    }

    pub fn words(&self, degree: usize) -> &[LyndonWord] {
        &self.by_degree[degree - 1]
    }

    /// A uniformly chosen word of a uniformly chosen degree in
    /// `min_degree..=max_degree`.
    pub fn sample<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        min_degree: usize,
        max_degree: usize,
    ) -> LyndonWord {
        let d = rng.random_range(min_degree..=max_degree);
        let words = self.words(d);
        words[rng.random_range(0..words.len())].clone()
    }
}

fn nonzero_int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let k = rng.random_range(-bound..=bound);
        if k != 0 {
            return k;
        }
    }
}

/// A nonzero rational `p/q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    Rational::new(
        nonzero_int(rng, bound).into(),
        rng.random_range(1..=bound).into(),
    )
}

/// Up to `terms` random basis words with small nonzero integer coefficients
/// and degrees in `min_degree..=max_degree`.
pub fn random_element<R: Rng + ?Sized>(
    rng: &mut R,
    pool: &WordPool,
    truncation: usize,
    min_degree: usize,
    max_degree: usize,
    terms: usize,
) -> LieElement {
    let picks: Vec<_> = (0..terms)
        .map(|_| {
            let w = pool.sample(rng, min_degree, max_degree);
            (w, Rational::from_integer(nonzero_int(rng, 5).into()))
        })
        .collect();
    LieElement::from_terms(picks, truncation)
}

/// Shape of sampled automorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutomorphismShape {
    /// Bound on numerators and denominators of `c` and `cbar`.
    pub scalar_bound: i64,
    /// Number of sampled terms in each of `z` and `z'`.
    pub perturbation_terms: usize,
    /// Zero perturbations.
    pub diagonal: bool,
}

impl Default for AutomorphismShape {
    fn default() -> Self {
        Self {
            scalar_bound: 5,
            perturbation_terms: 3,
            diagonal: false,
        }
    }
}

pub fn random_automorphism<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &FreeLieAlgebra,
    pool: &WordPool,
    shape: AutomorphismShape,
) -> LieAutomorphism {
    let d = alg.truncation();
    let c = random_scalar(rng, shape.scalar_bound);
    let cbar = random_scalar(rng, shape.scalar_bound);
    let (z, zprime) = if shape.diagonal || d < 2 {
        (alg.zero(), alg.zero())
    } else {
        let top = d.min(pool.max_degree());
        (
            random_element(rng, pool, d, 2, top, shape.perturbation_terms),
            random_element(rng, pool, d, 2, top, shape.perturbation_terms),
        )
    };
    LieAutomorphism::new(c, cbar, z, zprime).expect("sampled data satisfies the invariants")
}

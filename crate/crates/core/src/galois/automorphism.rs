use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::LieError;
use crate::freelie::{lyndon_basis, FreeLieAlgebra, Generator, LieElement, LyndonWord};
use crate::wquotient::{in_ideal, Bidegree};
use crate::Rational;

/// Applies the Lie endomorphism determined by `e -> image_e`, `f -> image_f`
/// to `x`. Images of basis words are built along their standard
/// factorizations and cached for the duration of the call.
pub fn apply_homomorphism(
    alg: &FreeLieAlgebra,
    image_e: &LieElement,
    image_f: &LieElement,
    x: &LieElement,
) -> Result<LieElement, LieError> {
    let mut cache = BTreeMap::new();
    let mut out = alg.zero();
    for (w, c) in x.terms() {
        let img = image_of_word(alg, image_e, image_f, w, &mut cache)?;
        out = out.checked_add(&img.scale(c))?;
    }
    Ok(out)
}

fn image_of_word(
    alg: &FreeLieAlgebra,
    image_e: &LieElement,
    image_f: &LieElement,
    w: &LyndonWord,
    cache: &mut BTreeMap<LyndonWord, LieElement>,
) -> Result<LieElement, LieError> {
    if let Some(img) = cache.get(w) {
        return Ok(img.clone());
    }
    let img = match w.standard_factorization() {
        None => match w.letters()[0] {
            Generator::E => image_e.clone(),
            Generator::F => image_f.clone(),
        },
        Some((u, v)) => {
            let iu = image_of_word(alg, image_e, image_f, &u, cache)?;
            let iv = image_of_word(alg, image_e, image_f, &v, cache)?;
            alg.bracket(&iu, &iv)?
        }
    };
    cache.insert(w.clone(), img.clone());
    Ok(img)
}

/// The automorphism `e -> c e + z`, `f -> cbar f + z'` with `z, z'` of
/// degree at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAutomorphism {
    c: Rational,
    cbar: Rational,
    z: LieElement,
    zprime: LieElement,
}

impl LieAutomorphism {
    pub fn new(
        c: Rational,
        cbar: Rational,
        z: LieElement,
        zprime: LieElement,
    ) -> Result<Self, LieError> {
        if c.is_zero() || cbar.is_zero() {
            return Err(LieError::ZeroScalar);
        }
        if z.truncation() != zprime.truncation() {
            return Err(LieError::TruncationMismatch {
                left: z.truncation(),
                right: zprime.truncation(),
            });
        }
        if z.min_degree().is_some_and(|d| d < 2) || zprime.min_degree().is_some_and(|d| d < 2) {
            return Err(LieError::PerturbationDegree);
        }
        Ok(Self { c, cbar, z, zprime })
    }

    pub fn diagonal(c: Rational, cbar: Rational, truncation: usize) -> Result<Self, LieError> {
        Self::new(
            c,
            cbar,
            LieElement::zero(truncation),
            LieElement::zero(truncation),
        )
    }

    pub fn identity(truncation: usize) -> Self {
        Self::diagonal(Rational::one(), Rational::one(), truncation).expect("unit scalars")
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn cbar(&self) -> &Rational {
        &self.cbar
    }

    pub fn z(&self) -> &LieElement {
        &self.z
    }

    pub fn zprime(&self) -> &LieElement {
        &self.zprime
    }

    pub fn truncation(&self) -> usize {
        self.z.truncation()
    }

    pub fn is_diagonal(&self) -> bool {
        self.z.is_zero() && self.zprime.is_zero()
    }

    pub fn image_of_generator(&self, g: Generator) -> LieElement {
        let t = self.truncation();
        match g {
            Generator::E => &LieElement::generator(g, t).scale(&self.c) + &self.z,
            Generator::F => &LieElement::generator(g, t).scale(&self.cbar) + &self.zprime,
        }
    }

    pub fn apply(&self, alg: &FreeLieAlgebra, x: &LieElement) -> Result<LieElement, LieError> {
        apply_homomorphism(
            alg,
            &self.image_of_generator(Generator::E),
            &self.image_of_generator(Generator::F),
            x,
        )
    }

    /// `self` after `first`, i.e. `x -> self(first(x))`.
    pub fn after(&self, first: &LieAutomorphism, alg: &FreeLieAlgebra) -> Result<Self, LieError> {
        let z = &self.z.scale(&first.c) + &self.apply(alg, &first.z)?;
        let zprime = &self.zprime.scale(&first.cbar) + &self.apply(alg, &first.zprime)?;
        Self::new(&self.c * &first.c, &self.cbar * &first.cbar, z, zprime)
    }

    /// `c^i cbar^j`, the scalar by which the automorphism acts on bidegree
    /// `(i, j)` modulo higher terms.
    pub fn leading_scalar(&self, bidegree: Bidegree) -> Rational {
        num_traits::pow(self.c.clone(), bidegree.i) * num_traits::pow(self.cbar.clone(), bidegree.j)
    }
}

/// Outcome of the leading-term check for one basis word `l` of bidegree
/// `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingTermReport {
    pub word: LyndonWord,
    pub bidegree: Bidegree,
    /// `phi(l) - c^i cbar^j l`.
    pub remainder: LieElement,
    /// The image lies in `L_{>=i,>=j}`.
    pub filtration_stable: bool,
    /// Every remainder term has degree above `i + j` and bidegree
    /// `>= (i, j)`. Holds for all perturbations in degree 2 or more.
    pub guaranteed: bool,
    /// The remainder lies in `L_{>=i+1,>=j+1}`. Generic perturbations
    /// violate this; it is reported, not required.
    pub literal: bool,
}

/// Checks every Lyndon basis word of degree at most `max_degree`.
/// `max_degree` must leave room for at least one remainder degree.
pub fn check_leading_term(
    alg: &FreeLieAlgebra,
    phi: &LieAutomorphism,
    max_degree: usize,
) -> Result<Vec<LeadingTermReport>, LieError> {
    if phi.truncation() != alg.truncation() {
        return Err(LieError::TruncationMismatch {
            left: phi.truncation(),
            right: alg.truncation(),
        });
    }
    if max_degree + 1 > alg.truncation() {
        return Err(LieError::DegreeOverflow {
            degree: max_degree + 1,
            truncation: alg.truncation(),
        });
    }
    let image_e = phi.image_of_generator(Generator::E);
    let image_f = phi.image_of_generator(Generator::F);
    let mut cache = BTreeMap::new();
    let mut out = Vec::new();
    for n in 1..=max_degree {
        for word in lyndon_basis(n)? {
            let bidegree = Bidegree::of(&word);
            let image = image_of_word(alg, &image_e, &image_f, &word, &mut cache)?;
            let leading = alg
                .basis(word.clone())?
                .scale(&phi.leading_scalar(bidegree));
            let remainder = image.checked_sub(&leading)?;
            let guaranteed = remainder
                .terms()
                .all(|(w, _)| w.degree() > n && Bidegree::of(w).dominates(bidegree));
            let literal = in_ideal(&remainder, bidegree.i + 1, bidegree.j + 1);
            let filtration_stable = in_ideal(&image, bidegree.i, bidegree.j);
            out.push(LeadingTermReport {
                word,
                bidegree,
                remainder,
                filtration_stable,
                guaranteed,
                literal,
            });
        }
    }
    Ok(out)
}

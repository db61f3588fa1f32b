//! The bigraded filtration `L_{>=n,>=m}` and the quotient
//! `W = L / L_{>=2,>=2}` with its graded pieces.

use alloc::vec::Vec;

use crate::error::LieError;
use crate::freelie::{lyndon_words_with_bidegree, FreeLieAlgebra, LieElement, LyndonWord};

/// Levels up to which the graded basis of `W` is enumerated; beyond this the
/// dimension comes from the closed form.
pub const ENUMERATED_LEVELS: usize = 32;

/// Counts of `e` and `f` in a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub i: usize,
    pub j: usize,
}

impl Bidegree {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn of(word: &LyndonWord) -> Self {
        let (i, j) = word.bidegree();
        Self { i, j }
    }

    pub fn total(self) -> usize {
        self.i + self.j
    }

    /// Componentwise `self >= other`.
    pub fn dominates(self, other: Bidegree) -> bool {
        self.i >= other.i && self.j >= other.j
    }
}

/// The closed ideal `L_{>=n,>=m}` spanned by bidegrees `(i, j)` with
/// `i >= n` and `j >= m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiltrationIdeal {
    pub n: usize,
    pub m: usize,
}

impl FiltrationIdeal {
    pub fn new(n: usize, m: usize) -> Self {
        Self { n, m }
    }

    pub fn contains(&self, x: &LieElement) -> bool {
        in_ideal(x, self.n, self.m)
    }

    pub fn contains_word(&self, word: &LyndonWord) -> bool {
        Bidegree::of(word).dominates(Bidegree::new(self.n, self.m))
    }
}

/// True iff every term of `x` has bidegree `>= (n, m)`. Zero lies in every
/// ideal.
pub fn in_ideal(x: &LieElement, n: usize, m: usize) -> bool {
    let floor = Bidegree::new(n, m);
    x.terms().all(|(w, _)| Bidegree::of(w).dominates(floor))
}

/// True iff the word survives in `W`, i.e. its bidegree is not `>= (2, 2)`.
pub fn survives_in_w(word: &LyndonWord) -> bool {
    !Bidegree::of(word).dominates(Bidegree::new(2, 2))
}

/// An element of `W`, stored as its canonical representative: the terms of
/// bidegree not `>= (2, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WElement(LieElement);

impl WElement {
    pub fn representative(&self) -> &LieElement {
        &self.0
    }

    pub fn into_inner(self) -> LieElement {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The bracket in `W`: bracket the representatives, then project.
    pub fn bracket(&self, other: &WElement, alg: &FreeLieAlgebra) -> Result<WElement, LieError> {
        Ok(project_to_w(&alg.bracket(&self.0, &other.0)?))
    }
}

/// Deletes every term of bidegree `>= (2, 2)`.
pub fn project_to_w(x: &LieElement) -> WElement {
    WElement(x.retain_words(survives_in_w))
}

/// Lyndon words of degree `n` that survive in `W`, in lexicographic order.
///
/// Only bidegrees with at most one `e` or at most one `f` can survive, so
/// this never enumerates the full degree-`n` basis.
pub fn w_graded_basis(n: usize) -> Result<Vec<LyndonWord>, LieError> {
    if n == 0 {
        return Err(LieError::ZeroDegree);
    }
    let mut out = Vec::new();
    for i in 0..=n {
        let j = n - i;
        if i <= 1 || j <= 1 {
            out.extend(lyndon_words_with_bidegree(i, j));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `dim W^{n+1} \ W^n`: 2 at `n = 1`, 1 at `n = 2`, 2 afterwards.
pub fn w_graded_dimension(n: usize) -> Result<usize, LieError> {
    if n == 0 {
        return Err(LieError::ZeroDegree);
    }
    if n <= ENUMERATED_LEVELS {
        return Ok(w_graded_basis(n)?.len());
    }
    Ok(2)
}

/// `dim W_n`, the sum of the graded dimensions through level `n`.
pub fn w_nilpotent_dimension(n: usize) -> Result<usize, LieError> {
    if n == 0 {
        return Err(LieError::ZeroDegree);
    }
    (1..=n).map(w_graded_dimension).sum()
}

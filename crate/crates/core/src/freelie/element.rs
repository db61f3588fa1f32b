use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::word::{Generator, LyndonWord};
use crate::error::LieError;
use crate::Rational;

/// Degree information for a Lie element. The zero element has no degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(usize),
    Mixed { low: usize, high: usize },
}

/// A truncated Lie series: exact rational coefficients on Lyndon basis
/// words of degree at most `truncation`.
///
/// Terms of degree above the truncation degree are dropped whenever they
/// arise, so arithmetic happens modulo the `(truncation + 1)`-st term of the
/// lower central series. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieElement {
    terms: BTreeMap<LyndonWord, Rational>,
    truncation: usize,
}

impl LieElement {
    pub fn zero(truncation: usize) -> Self {
        Self {
            terms: BTreeMap::new(),
            truncation,
        }
    }

    pub fn generator(g: Generator, truncation: usize) -> Self {
        Self::basis(LyndonWord::letter(g), truncation)
    }

    /// The basis element of `word`, or zero if the word lies above the
    /// truncation degree.
    pub fn basis(word: LyndonWord, truncation: usize) -> Self {
        let mut out = Self::zero(truncation);
        out.add_term(word, Rational::one());
        out
    }

    /// Builds an element from `(word, coefficient)` pairs, summing repeated
    /// words and dropping zeros and terms above the truncation degree.
    pub fn from_terms<I>(terms: I, truncation: usize) -> Self
    where
        I: IntoIterator<Item = (LyndonWord, Rational)>,
    {
        let mut out = Self::zero(truncation);
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, word: LyndonWord, coeff: Rational) {
        if coeff.is_zero() || word.degree() > self.truncation {
            return;
        }
        match self.terms.entry(word) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LyndonWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &LyndonWord) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Degree {
        let mut degrees = self.terms.keys().map(LyndonWord::degree);
        let Some(first) = degrees.next() else {
            return Degree::Zero;
        };
        let (low, high) = degrees.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d)));
        if low == high {
            Degree::Homogeneous(low)
        } else {
            Degree::Mixed { low, high }
        }
    }

    /// Smallest degree among the terms, `None` for zero.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(LyndonWord::degree).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(LyndonWord::degree).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.truncation);
        }
        Self {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
            truncation: self.truncation,
        }
    }

    /// Keeps the terms whose word satisfies `keep`.
    pub fn retain_words(&self, mut keep: impl FnMut(&LyndonWord) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
            truncation: self.truncation,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LieError> {
        same_truncation(self, other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LieError> {
        same_truncation(self, other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Terms ordered by degree, then lexicographically.
    pub fn graded_terms(&self) -> Vec<(&LyndonWord, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.cmp(b.0)));
        v
    }
}

pub(crate) fn same_truncation(a: &LieElement, b: &LieElement) -> Result<(), LieError> {
    if a.truncation == b.truncation {
        Ok(())
    } else {
        Err(LieError::TruncationMismatch {
            left: a.truncation,
            right: b.truncation,
        })
    }
}

/// Panics if the truncation degrees differ; use [`LieElement::checked_add`]
/// to get an error instead.
impl Add for &LieElement {
    type Output = LieElement;

    fn add(self, rhs: &LieElement) -> LieElement {
        self.checked_add(rhs)
            .expect("adding Lie elements with different truncation")
    }
}

impl Add for LieElement {
    type Output = LieElement;

    fn add(self, rhs: LieElement) -> LieElement {
        &self + &rhs
    }
}

impl Sub for &LieElement {
    type Output = LieElement;

    fn sub(self, rhs: &LieElement) -> LieElement {
        self.checked_sub(rhs)
            .expect("subtracting Lie elements with different truncation")
    }
}

impl Sub for LieElement {
    type Output = LieElement;

    fn sub(self, rhs: LieElement) -> LieElement {
        &self - &rhs
    }
}

impl Neg for &LieElement {
    type Output = LieElement;

    fn neg(self) -> LieElement {
        LieElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
            truncation: self.truncation,
        }
    }
}

impl Neg for LieElement {
    type Output = LieElement;

    fn neg(self) -> LieElement {
        -&self
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.graded_terms().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{a}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieElement[<= {}]({})", self.truncation, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> LyndonWord {
        s.parse().unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn zero_and_degrees() {
        let z = LieElement::zero(4);
        assert_eq!(z.degree(), Degree::Zero);
        assert_eq!(z.to_string(), "0");
        let x = LieElement::from_terms([(w("EF"), q(2)), (w("EEF"), q(-1))], 4);
        assert_eq!(x.degree(), Degree::Mixed { low: 2, high: 3 });
        assert_eq!(x.to_string(), "2*EF - EEF");
        assert_eq!(
            LieElement::generator(Generator::E, 4).degree(),
            Degree::Homogeneous(1)
        );
    }

    #[test]
    fn silent_truncation_and_cancellation() {
        let x = LieElement::from_terms([(w("EEF"), q(1)), (w("EEEF"), q(1))], 3);
        assert_eq!(x.len(), 1);
        let y = LieElement::from_terms([(w("EF"), q(3)), (w("EF"), q(-3))], 3);
        assert!(y.is_zero());
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn mismatched_truncation() {
        let a = LieElement::generator(Generator::E, 3);
        let b = LieElement::generator(Generator::E, 4);
        assert_eq!(
            a.checked_add(&b),
            Err(LieError::TruncationMismatch { left: 3, right: 4 })
        );
    }
}

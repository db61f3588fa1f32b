use alloc::collections::BTreeMap;
use alloc::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use spin::RwLock;

use super::element::{same_truncation, LieElement};
use super::tree::{BracketTree, LieExpression};
use super::word::{Generator, LyndonWord};
use crate::error::LieError;
use crate::Rational;

type Column = BTreeMap<LyndonWord, BigInt>;

/// The free Lie algebra on `e`, `f` modulo brackets of degree above
/// `truncation`, in the Lyndon basis with standard bracketing.
///
/// Products of basis elements are computed by straightening: for Lyndon
/// words `u < v` with standard factorization `u = u1 u2`, the bracket
/// `[P_u, P_v]` is the basis element `P_uv` when `u` is a letter or
/// `u2 >= v`, and otherwise is expanded with the Jacobi identity
/// `[[P_u1, P_u2], P_v] = [P_u1, [P_u2, P_v]] + [[P_u1, P_v], P_u2]`.
/// Every computed product is memoized. Entries are written once and never
/// changed, so the algebra can be shared freely between threads.
pub struct FreeLieAlgebra {
    truncation: usize,
    memo: RwLock<BTreeMap<(LyndonWord, LyndonWord), Arc<Column>>>,
}

impl core::fmt::Debug for FreeLieAlgebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FreeLieAlgebra")
            .field("truncation", &self.truncation)
            .field("memoized_products", &self.memo.read().len())
            .finish()
    }
}

impl FreeLieAlgebra {
    pub fn new(truncation: usize) -> Result<Self, LieError> {
        if truncation == 0 {
            return Err(LieError::ZeroTruncation);
        }
        Ok(Self {
            truncation,
            memo: RwLock::new(BTreeMap::new()),
        })
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn memoized_products(&self) -> usize {
        self.memo.read().len()
    }

    pub fn zero(&self) -> LieElement {
        LieElement::zero(self.truncation)
    }

    pub fn generator(&self, g: Generator) -> LieElement {
        LieElement::generator(g, self.truncation)
    }

    pub fn e(&self) -> LieElement {
        self.generator(Generator::E)
    }

    pub fn f(&self) -> LieElement {
        self.generator(Generator::F)
    }

    pub fn basis(&self, word: LyndonWord) -> Result<LieElement, LieError> {
        self.check_degree(word.degree())?;
        Ok(LieElement::basis(word, self.truncation))
    }

    fn check_degree(&self, degree: usize) -> Result<(), LieError> {
        if degree > self.truncation {
            Err(LieError::DegreeOverflow {
                degree,
                truncation: self.truncation,
            })
        } else {
            Ok(())
        }
    }

    fn check_element(&self, x: &LieElement) -> Result<(), LieError> {
        same_truncation(&self.zero(), x)
    }

    /// `[P_u, P_v]` for arbitrary basis words as an integer column, with a
    /// sign for the antisymmetric lookup. The caller guarantees that the
    /// total degree does not exceed the truncation.
    fn basis_product(&self, u: &LyndonWord, v: &LyndonWord) -> Option<(bool, Arc<Column>)> {
        match u.cmp(v) {
            core::cmp::Ordering::Equal => None,
            core::cmp::Ordering::Less => Some((false, self.ordered_product(u, v))),
            core::cmp::Ordering::Greater => Some((true, self.ordered_product(v, u))),
        }
    }

    fn ordered_product(&self, u: &LyndonWord, v: &LyndonWord) -> Arc<Column> {
        let key = (u.clone(), v.clone());
        if let Some(col) = self.memo.read().get(&key) {
            return col.clone();
        }
        let col = Arc::new(self.straighten(u, v));
        self.memo.write().entry(key).or_insert(col).clone()
    }

    fn straighten(&self, u: &LyndonWord, v: &LyndonWord) -> Column {
        let split = u.standard_factorization();
        let (u1, u2) = match split {
            Some((u1, u2)) if u2 < *v => (u1, u2),
            _ => {
                let mut col = Column::new();
                col.insert(u.concat(v), BigInt::one());
                return col;
            }
        };
        let mut out = Column::new();
        // [P_u1, [P_u2, P_v]]
        if let Some((neg, inner)) = self.basis_product(&u2, v) {
            for (w, c) in inner.iter() {
                let c = if neg { -c } else { c.clone() };
                self.accumulate(&mut out, &u1, w, &c);
            }
        }
        // [[P_u1, P_v], P_u2]
        if let Some((neg, inner)) = self.basis_product(&u1, v) {
            for (w, c) in inner.iter() {
                let c = if neg { -c } else { c.clone() };
                self.accumulate(&mut out, w, &u2, &c);
            }
        }
        out
    }

    fn accumulate(&self, out: &mut Column, a: &LyndonWord, b: &LyndonWord, scale: &BigInt) {
        if let Some((neg, col)) = self.basis_product(a, b) {
            for (w, c) in col.iter() {
                let term = if neg { -(c * scale) } else { c * scale };
                let slot = out.entry(w.clone()).or_insert_with(BigInt::zero);
                *slot += term;
                if slot.is_zero() {
                    out.remove(w);
                }
            }
        }
    }

    /// The Lie bracket, truncated at the algebra's degree.
    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement, LieError> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut acc: BTreeMap<LyndonWord, Rational> = BTreeMap::new();
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                if u.degree() + v.degree() > self.truncation {
                    continue;
                }
                let Some((neg, col)) = self.basis_product(u, v) else {
                    continue;
                };
                let ab = if neg { -(a * b) } else { a * b };
                for (w, c) in col.iter() {
                    let term = &ab * Rational::from_integer(c.clone());
                    *acc.entry(w.clone()).or_insert_with(Rational::zero) += term;
                }
            }
        }
        Ok(LieElement::from_terms(acc, self.truncation))
    }

    /// Applies `ad(g)` to `target` `k` times. Rejects the call when
    /// `k + deg(target)` exceeds the truncation degree.
    pub fn ad_power(
        &self,
        g: Generator,
        k: usize,
        target: &LieElement,
    ) -> Result<LieElement, LieError> {
        self.check_element(target)?;
        if let Some(d) = target.max_degree() {
            self.check_degree(d + k)?;
        }
        let gen = self.generator(g);
        let mut out = target.clone();
        for _ in 0..k {
            out = self.bracket(&gen, &out)?;
        }
        Ok(out)
    }

    /// Expands a single bracket monomial in the Lyndon basis.
    pub fn evaluate(&self, tree: &BracketTree) -> Result<LieElement, LieError> {
        self.check_degree(tree.degree())?;
        self.evaluate_unchecked(tree)
    }

    fn evaluate_unchecked(&self, tree: &BracketTree) -> Result<LieElement, LieError> {
        match tree {
            BracketTree::Leaf(g) => Ok(self.generator(*g)),
            BracketTree::Node(l, r) => {
                let l = self.evaluate_unchecked(l)?;
                let r = self.evaluate_unchecked(r)?;
                self.bracket(&l, &r)
            }
        }
    }

    /// Expands a rational combination of bracket monomials in the Lyndon
    /// basis. Each monomial must fit within the truncation degree.
    pub fn rewrite_to_basis(&self, expr: &LieExpression) -> Result<LieElement, LieError> {
        let mut out = self.zero();
        for (c, tree) in &expr.terms {
            out = &out + &self.evaluate(tree)?.scale(c);
        }
        Ok(out)
    }
}

/// Expands `expr` in the Lyndon basis modulo degree `truncation + 1`.
pub fn rewrite_to_basis(expr: &LieExpression, truncation: usize) -> Result<LieElement, LieError> {
    FreeLieAlgebra::new(truncation)?.rewrite_to_basis(expr)
}

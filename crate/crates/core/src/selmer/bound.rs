use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use num_rational::Rational64;
use num_traits::{One, Zero};

/// An unknown nonnegative finite constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// `dim H^2(G_T, gr_n)` at an exceptional level `n`.
    H2AtLevel(usize),
    /// The undetermined constant `C` of the asymptotic global bound `C + n`.
    GlobalConstant,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::H2AtLevel(n) => write!(f, "C_{n}"),
            Symbol::GlobalConstant => write!(f, "C"),
        }
    }
}

/// `constant + sum(symbols)`, every symbol standing for an unknown
/// nonnegative integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BoundValue {
    pub constant: i64,
    pub symbols: Vec<Symbol>,
}

impl BoundValue {
    pub fn concrete(constant: i64) -> Self {
        Self {
            constant,
            symbols: Vec::new(),
        }
    }

    pub fn symbol(symbol: Symbol) -> Self {
        Self {
            constant: 0,
            symbols: alloc::vec![symbol],
        }
    }

    pub fn is_concrete(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn value(&self) -> Option<i64> {
        self.is_concrete().then_some(self.constant)
    }

    /// Whether `self < other` is known for every value of the symbols.
    /// `None` when it depends on them.
    pub fn strictly_below(&self, other: i64) -> Option<bool> {
        match self.value() {
            Some(v) => Some(v < other),
            None if self.constant >= other => Some(false),
            None => None,
        }
    }
}

impl Add for &BoundValue {
    type Output = BoundValue;

    fn add(self, rhs: &BoundValue) -> BoundValue {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&rhs.symbols);
        symbols.sort();
        BoundValue {
            constant: self.constant + rhs.constant,
            symbols,
        }
    }
}

impl Add for BoundValue {
    type Output = BoundValue;

    fn add(self, rhs: BoundValue) -> BoundValue {
        &self + &rhs
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return write!(f, "{}", self.constant);
        }
        for (k, s) in self.symbols.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{s}")?;
        }
        match self.constant {
            0 => Ok(()),
            c if c > 0 => write!(f, " + {c}"),
            c => write!(f, " - {}", -c),
        }
    }
}

/// `slope * n + intercept + sum(symbols)`, valid for `n >= valid_from`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineBound {
    pub slope: Rational64,
    pub intercept: Rational64,
    pub symbols: Vec<Symbol>,
    pub valid_from: usize,
}

impl AffineBound {
    pub fn new(slope: i64, intercept: i64, symbols: Vec<Symbol>, valid_from: usize) -> Self {
        Self {
            slope: Rational64::from_integer(slope),
            intercept: Rational64::from_integer(intercept),
            symbols,
            valid_from,
        }
    }

    pub fn has_symbolic_constant(&self) -> bool {
        !self.symbols.is_empty()
    }

    /// The value at level `n`; `None` when symbolic or outside the range.
    pub fn evaluate(&self, n: usize) -> Option<Rational64> {
        if self.has_symbolic_constant() || n < self.valid_from {
            return None;
        }
        Some(self.slope * Rational64::from_integer(n as i64) + self.intercept)
    }

    /// Whether `self < other` holds for all sufficiently large `n`. Decided
    /// by the slopes when they differ; with equal slopes only when both
    /// intercepts are concrete.
    pub fn eventually_below(&self, other: &AffineBound) -> Option<bool> {
        if self.slope != other.slope {
            return Some(self.slope < other.slope);
        }
        if self.has_symbolic_constant() || other.has_symbolic_constant() {
            return None;
        }
        Some(self.intercept < other.intercept)
    }
}

impl fmt::Display for AffineBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope.is_one() {
            write!(f, "n")?;
        } else if !self.slope.is_zero() {
            write!(f, "{}n", self.slope)?;
        }
        for s in &self.symbols {
            write!(f, " + {s}")?;
        }
        if self.intercept > Rational64::zero() {
            write!(f, " + {}", self.intercept)?;
        } else if self.intercept < Rational64::zero() {
            write!(f, " - {}", -self.intercept)?;
        }
        write!(f, " (n >= {})", self.valid_from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn values() {
        let a = BoundValue::concrete(3) + BoundValue::symbol(Symbol::H2AtLevel(4));
        assert_eq!(a.to_string(), "C_4 + 3");
        assert_eq!(a.value(), None);
        assert_eq!(a.strictly_below(10), None);
        assert_eq!(a.strictly_below(3), Some(false));
        assert_eq!(BoundValue::concrete(2).strictly_below(3), Some(true));
    }

    #[test]
    fn affine() {
        let global = AffineBound::new(1, -1, vec![Symbol::GlobalConstant], 5);
        let local = AffineBound::new(2, -2, vec![], 2);
        assert_eq!(global.eventually_below(&local), Some(true));
        assert_eq!(local.evaluate(5), Some(Rational64::from_integer(8)));
        assert_eq!(global.evaluate(9), None);
        assert_eq!(global.to_string(), "n + C - 1 (n >= 5)");
        let g2 = AffineBound::new(2, 0, vec![Symbol::GlobalConstant], 2);
        assert_eq!(g2.eventually_below(&local), None);
    }
}

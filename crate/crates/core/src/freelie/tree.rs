//! Bracket expressions in the generators, used as input for rewriting.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::word::{Generator, LyndonWord};
use crate::error::LieError;
use crate::Rational;

/// A bracket monomial: a leaf generator or a bracket `[left, right]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BracketTree {
    Leaf(Generator),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn leaf(g: Generator) -> Self {
        BracketTree::Leaf(g)
    }

    pub fn bracket(left: BracketTree, right: BracketTree) -> Self {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn bidegree(&self) -> (usize, usize) {
        match self {
            BracketTree::Leaf(Generator::E) => (1, 0),
            BracketTree::Leaf(Generator::F) => (0, 1),
            BracketTree::Node(l, r) => {
                let (a, b) = l.bidegree();
                let (c, d) = r.bidegree();
                (a + c, b + d)
            }
        }
    }

    /// The standard (right-normed along the standard factorization)
    /// bracketing of a Lyndon word.
    pub fn standard(word: &LyndonWord) -> Self {
        match word.standard_factorization() {
            None => BracketTree::Leaf(word.letters()[0]),
            Some((u, v)) => BracketTree::bracket(Self::standard(&u), Self::standard(&v)),
        }
    }

    /// The tree with `E` and `F` exchanged at every leaf.
    pub fn swapped(&self) -> Self {
        match self {
            BracketTree::Leaf(g) => BracketTree::Leaf(g.swapped()),
            BracketTree::Node(l, r) => BracketTree::bracket(l.swapped(), r.swapped()),
        }
    }

    /// `ad(g)^k (target)`, i.e. `[g, [g, ..., [g, target]]]`.
    pub fn ad_power(g: Generator, k: usize, target: BracketTree) -> Self {
        (0..k).fold(target, |acc, _| {
            BracketTree::bracket(BracketTree::Leaf(g), acc)
        })
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(Generator::E) => write!(f, "e"),
            BracketTree::Leaf(Generator::F) => write!(f, "f"),
            BracketTree::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl fmt::Debug for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), LieError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(LieError::Parse)
        }
    }

    fn tree(&mut self) -> Result<BracketTree, LieError> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'[') => {
                self.pos += 1;
                let l = self.tree()?;
                self.expect(b',')?;
                let r = self.tree()?;
                self.expect(b']')?;
                Ok(BracketTree::bracket(l, r))
            }
            Some(&c) => {
                let g = Generator::from_char(c as char).ok_or(LieError::Parse)?;
                self.pos += 1;
                Ok(BracketTree::Leaf(g))
            }
            None => Err(LieError::Parse),
        }
    }
}

/// Parses expressions like `[e,[e,f]]`; letters may be upper or lower case.
impl FromStr for BracketTree {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            bytes: s.as_bytes(),
            pos: 0,
        };
        let t = p.tree()?;
        p.skip_ws();
        if p.pos == p.bytes.len() {
            Ok(t)
        } else {
            Err(LieError::Parse)
        }
    }
}

/// A finite rational combination of bracket monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieExpression {
    pub terms: Vec<(Rational, BracketTree)>,
}

impl LieExpression {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, coeff: Rational, tree: BracketTree) -> Self {
        self.terms.push((coeff, tree));
        self
    }
}

impl From<BracketTree> for LieExpression {
    fn from(tree: BracketTree) -> Self {
        Self {
            terms: alloc::vec![(num_traits::One::one(), tree)],
        }
    }
}

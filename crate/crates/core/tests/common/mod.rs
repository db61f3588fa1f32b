#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use unip_core::freelie::{BracketTree, Generator, LieElement, LyndonWord};
use unip_core::Rational;
use unip_oracles::magma::Tree;
use unip_oracles::Q;

pub fn bytes(w: &LyndonWord) -> Vec<u8> {
    w.letters()
        .iter()
        .map(|g| if *g == Generator::E { 0 } else { 1 })
        .collect()
}

pub fn oracle_tree(t: &BracketTree) -> Tree {
    match t {
        BracketTree::Leaf(Generator::E) => Tree::Leaf(0),
        BracketTree::Leaf(Generator::F) => Tree::Leaf(1),
        BracketTree::Node(a, b) => Tree::node(oracle_tree(a), oracle_tree(b)),
    }
}

/// Lyndon coefficients keyed by oracle words.
pub fn coeffs(x: &LieElement) -> BTreeMap<Vec<u8>, Q> {
    x.terms().map(|(w, c)| (bytes(w), c.clone())).collect()
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A random bracketing of exactly `degree` leaves.
pub fn random_tree<R: Rng>(rng: &mut R, degree: usize) -> BracketTree {
    if degree == 1 {
        let g = if rng.random_bool(0.5) {
            Generator::E
        } else {
            Generator::F
        };
        return BracketTree::leaf(g);
    }
    let k = rng.random_range(1..degree);
    BracketTree::bracket(random_tree(rng, k), random_tree(rng, degree - k))
}

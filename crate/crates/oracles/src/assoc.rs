use std::collections::BTreeMap;

use num_traits::Zero;

use crate::magma::Tree;
use crate::words::{is_lyndon, standard_factorization};
use crate::Q;

/// A noncommutative polynomial: word -> coefficient.
pub type Poly = BTreeMap<Vec<u8>, Q>;

fn add_into(acc: &mut Poly, w: Vec<u8>, c: Q) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(w.clone()).or_insert_with(Q::zero);
    *slot += c;
    if slot.is_zero() {
        acc.remove(&w);
    }
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (u, x) in a {
        for (v, y) in b {
            let mut w = u.clone();
            w.extend_from_slice(v);
            add_into(&mut out, w, x * y);
        }
    }
    out
}

pub fn sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (w, c) in b {
        add_into(&mut out, w.clone(), -c.clone());
    }
    out
}

pub fn scale_add(acc: &mut Poly, p: &Poly, c: &Q) {
    for (w, x) in p {
        add_into(acc, w.clone(), x * c);
    }
}

/// Commutator `ab - ba`.
pub fn bracket(a: &Poly, b: &Poly) -> Poly {
    sub(&mul(a, b), &mul(b, a))
}

pub fn letter(l: u8) -> Poly {
    let mut p = Poly::new();
    p.insert(vec![l], crate::q(1));
    p
}

pub fn eval_tree(t: &Tree) -> Poly {
    match t {
        Tree::Leaf(l) => letter(*l),
        Tree::Node(a, b) => bracket(&eval_tree(a), &eval_tree(b)),
    }
}

/// The standard bracketing of a Lyndon word as an associative polynomial.
pub fn lyndon_poly(w: &[u8]) -> Poly {
    match standard_factorization(w) {
        None => letter(w[0]),
        Some((u, v)) => bracket(&lyndon_poly(&u), &lyndon_poly(&v)),
    }
}

/// Coefficients of a Lie polynomial in the Lyndon basis. The smallest word
/// of a Lie polynomial is Lyndon and is the leading word of its basis
/// element, so repeatedly cancelling it terminates.
pub fn expand(mut p: Poly) -> BTreeMap<Vec<u8>, Q> {
    let mut out = BTreeMap::new();
    while let Some((w, c)) = p.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
        assert!(is_lyndon(&w), "not a Lie polynomial: leading word {w:?}");
        let basis = lyndon_poly(&w);
        scale_add(&mut p, &basis, &-c.clone());
        out.insert(w, c);
    }
    out
}

/// Lie element given by Lyndon coefficients -> associative polynomial.
pub fn from_lyndon(coeffs: &BTreeMap<Vec<u8>, Q>) -> Poly {
    let mut out = Poly::new();
    for (w, c) in coeffs {
        scale_add(&mut out, &lyndon_poly(w), c);
    }
    out
}

/// Bracket of two Lyndon expansions, truncated at `max_degree`.
pub fn bracket_lyndon(
    a: &BTreeMap<Vec<u8>, Q>,
    b: &BTreeMap<Vec<u8>, Q>,
    max_degree: usize,
) -> BTreeMap<Vec<u8>, Q> {
    let mut p = bracket(&from_lyndon(a), &from_lyndon(b));
    p.retain(|w, _| w.len() <= max_degree);
    expand(p)
}

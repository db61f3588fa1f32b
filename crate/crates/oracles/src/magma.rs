//! Free magma algebra on `{e, f}` modulo antisymmetry and Jacobi.
//!
//! Antisymmetry is imposed structurally: a tree is canonical when at every
//! node the left child is strictly smaller than the right one; any tree
//! reduces to `±` a canonical tree or to zero. The Jacobi ideal in
//! bidegree `(i, j)` is spanned by `J(a, b, c)` for canonical `a, b, c` and
//! by `[rho, t]` for relations `rho` of lower degree and canonical `t`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::words::standard_factorization;
use crate::Q;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    Leaf(u8),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn node(a: Tree, b: Tree) -> Tree {
        Tree::Node(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn bidegree(&self) -> (usize, usize) {
        match self {
            Tree::Leaf(0) => (1, 0),
            Tree::Leaf(_) => (0, 1),
            Tree::Node(a, b) => {
                let (x, y) = a.bidegree();
                let (u, v) = b.bidegree();
                (x + u, y + v)
            }
        }
    }

    /// Standard bracketing of a Lyndon word.
    pub fn standard(w: &[u8]) -> Tree {
        match standard_factorization(w) {
            None => Tree::Leaf(w[0]),
            Some((u, v)) => Tree::node(Tree::standard(&u), Tree::standard(&v)),
        }
    }

    /// `±` canonical form, or `None` when antisymmetry forces zero.
    pub fn canonical(&self) -> Option<(i64, Tree)> {
        match self {
            Tree::Leaf(l) => Some((1, Tree::Leaf(*l))),
            Tree::Node(a, b) => {
                let (sa, ca) = a.canonical()?;
                let (sb, cb) = b.canonical()?;
                match ca.cmp(&cb) {
                    std::cmp::Ordering::Equal => None,
                    std::cmp::Ordering::Less => Some((sa * sb, Tree::node(ca, cb))),
                    std::cmp::Ordering::Greater => Some((-sa * sb, Tree::node(cb, ca))),
                }
            }
        }
    }
}

/// Linear combination of canonical trees.
pub type Combo = BTreeMap<Tree, Q>;

pub fn combo_add(acc: &mut Combo, t: &Tree, c: Q) {
    if let Some((s, ct)) = t.canonical() {
        let slot = acc.entry(ct.clone()).or_insert_with(Q::zero);
        *slot += c * Q::from_integer(s.into());
        if slot.is_zero() {
            acc.remove(&ct);
        }
    }
}

fn bracket_combo(a: &Combo, b: &Combo) -> Combo {
    let mut out = Combo::new();
    for (x, p) in a {
        for (y, r) in b {
            combo_add(&mut out, &Tree::node(x.clone(), y.clone()), p * r);
        }
    }
    out
}

/// Row-reduced basis of a subspace of `Q^n`.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<Q>) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Q::one() / &v[p];
        let v: Vec<Q> = v.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

struct Component {
    trees: Vec<Tree>,
    index: HashMap<Tree, usize>,
    relations: Echelon,
    /// Relation basis as combinations, for building higher contexts.
    relation_combos: Vec<Combo>,
}

/// The free Lie algebra realized as a magma quotient, up to `max_degree`.
pub struct MagmaLie {
    max_degree: usize,
    canonical: Vec<Vec<Tree>>,
    components: BTreeMap<(usize, usize), Component>,
}

impl MagmaLie {
    pub fn new(max_degree: usize) -> Self {
        let mut canonical: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::Leaf(0), Tree::Leaf(1)]];
        for n in 2..=max_degree {
            let mut level = Vec::new();
            for k in 1..n {
                for a in &canonical[k] {
                    for b in &canonical[n - k] {
                        if a < b {
                            level.push(Tree::node(a.clone(), b.clone()));
                        }
                    }
                }
            }
            level.sort();
            canonical.push(level);
        }
        let mut m = MagmaLie {
            max_degree,
            canonical,
            components: BTreeMap::new(),
        };
        for n in 1..=max_degree {
            for i in 0..=n {
                m.build_component(i, n - i);
            }
        }
        m
    }

    fn trees_of(&self, i: usize, j: usize) -> Vec<Tree> {
        self.canonical[i + j]
            .iter()
            .filter(|t| t.bidegree() == (i, j))
            .cloned()
            .collect()
    }

    fn build_component(&mut self, i: usize, j: usize) {
        let n = i + j;
        let trees = self.trees_of(i, j);
        let index: HashMap<Tree, usize> = trees
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, t)| (t, k))
            .collect();
        let mut candidates: Vec<Combo> = Vec::new();
        // Jacobi on canonical triples
        for da in 1..n {
            for db in 1..n - da {
                let dc = n - da - db;
                if dc == 0 {
                    continue;
                }
                for a in &self.canonical[da] {
                    for b in &self.canonical[db] {
                        for c in &self.canonical[dc] {
                            let (x, y, z) = (a.bidegree(), b.bidegree(), c.bidegree());
                            if (x.0 + y.0 + z.0, x.1 + y.1 + z.1) != (i, j) {
                                continue;
                            }
                            let mut r = Combo::new();
                            let one = Q::one();
                            combo_add(
                                &mut r,
                                &Tree::node(a.clone(), Tree::node(b.clone(), c.clone())),
                                one.clone(),
                            );
                            combo_add(
                                &mut r,
                                &Tree::node(b.clone(), Tree::node(c.clone(), a.clone())),
                                one.clone(),
                            );
                            combo_add(
                                &mut r,
                                &Tree::node(c.clone(), Tree::node(a.clone(), b.clone())),
                                one,
                            );
                            candidates.push(r);
                        }
                    }
                }
            }
        }
        // [rho, t] for lower relations
        for ((ri, rj), comp) in &self.components {
            if *ri > i || *rj > j || (ri + rj) >= n {
                continue;
            }
            let t_trees = self.trees_of(i - ri, j - rj);
            for rho in &comp.relation_combos {
                for t in &t_trees {
                    let mut tc = Combo::new();
                    combo_add(&mut tc, t, Q::one());
                    candidates.push(bracket_combo(rho, &tc));
                }
            }
        }
        let mut relations = Echelon::default();
        let mut relation_combos = Vec::new();
        for r in candidates {
            let mut v = vec![Q::zero(); trees.len()];
            for (t, c) in &r {
                v[index[t]] += c;
            }
            if relations.insert(v) {
                relation_combos.push(r);
            }
        }
        self.components.insert(
            (i, j),
            Component {
                trees,
                index,
                relations,
                relation_combos,
            },
        );
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Number of canonical trees of degree `n`.
    pub fn canonical_count(&self, n: usize) -> usize {
        self.canonical[n].len()
    }

    /// `dim L_{i,j}`.
    pub fn bigraded_dimension(&self, i: usize, j: usize) -> usize {
        let c = &self.components[&(i, j)];
        c.trees.len() - c.relations.rank()
    }

    pub fn dimension(&self, n: usize) -> usize {
        (0..=n).map(|i| self.bigraded_dimension(i, n - i)).sum()
    }

    /// Whether a combination of (arbitrary) trees is zero in the free Lie
    /// algebra.
    pub fn is_zero(&self, terms: &[(Q, Tree)]) -> bool {
        let mut combo = Combo::new();
        for (c, t) in terms {
            combo_add(&mut combo, t, c.clone());
        }
        let mut parts: BTreeMap<(usize, usize), Vec<Q>> = BTreeMap::new();
        for (t, c) in &combo {
            let comp = &self.components[&t.bidegree()];
            let v = parts
                .entry(t.bidegree())
                .or_insert_with(|| vec![Q::zero(); comp.trees.len()]);
            v[comp.index[t]] += c;
        }
        parts.into_iter().all(|(bd, v)| {
            let comp = &self.components[&bd];
            comp.relations.reduce(v).iter().all(Zero::is_zero)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::from_str;

    #[test]
    fn dimensions() {
        let m = MagmaLie::new(7);
        let dims: Vec<usize> = (1..=7).map(|n| m.dimension(n)).collect();
        assert_eq!(dims, [2, 1, 2, 3, 6, 9, 18]);
        assert_eq!(m.bigraded_dimension(2, 3), 2);
        assert_eq!(m.bigraded_dimension(2, 0), 0);
    }

    #[test]
    fn jacobi_consequence() {
        let m = MagmaLie::new(4);
        let e = || Tree::Leaf(0);
        let f = || Tree::Leaf(1);
        // [[e,[e,f]],f] = [e,[[e,f],f]]
        let lhs = Tree::node(Tree::node(e(), Tree::node(e(), f())), f());
        let rhs = Tree::node(e(), Tree::node(Tree::node(e(), f()), f()));
        assert!(m.is_zero(&[(crate::q(1), lhs.clone()), (crate::q(-1), rhs)]));
        assert!(!m.is_zero(&[(crate::q(1), lhs)]));
        assert_eq!(Tree::standard(&from_str("EEFF")).degree(), 4);
    }
}

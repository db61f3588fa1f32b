mod common;

use common::{bytes, coeffs, oracle_tree, q, random_tree};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unip_core::freelie::{
    bigraded_dimension, lyndon_basis, lyndon_words_with_bidegree, witt_dimension, BracketTree,
    FreeLieAlgebra, LieElement, LieExpression,
};
use unip_core::galois::sampling::{random_element, WordPool};
use unip_oracles::assoc;
use unip_oracles::magma::{MagmaLie, Tree};
use unip_oracles::words;

#[test]
fn counts_agree_with_exhaustive_search() {
    for n in 1..=16 {
        let ours: Vec<Vec<u8>> = lyndon_basis(n).unwrap().iter().map(bytes).collect();
        let brute = words::lyndon_words(n);
        assert_eq!(ours, brute, "degree {n}");
        assert_eq!(witt_dimension(n).unwrap(), brute.len() as u128);
        let sum: u128 = (0..=n)
            .map(|i| bigraded_dimension(i, n - i).unwrap_or(0))
            .sum();
        assert_eq!(sum, brute.len() as u128);
    }
}

#[test]
fn counts_agree_with_magma_rank() {
    let magma = MagmaLie::new(6);
    for n in 1..=6 {
        assert_eq!(magma.dimension(n) as u128, witt_dimension(n).unwrap());
        for i in 0..=n {
            let ours = bigraded_dimension(i, n - i).unwrap_or(0);
            assert_eq!(
                magma.bigraded_dimension(i, n - i) as u128,
                ours,
                "({i},{})",
                n - i
            );
        }
    }
}

#[test]
fn bigraded_symmetry_and_enumeration() {
    for i in 0..=12 {
        for j in 0..=12 {
            if i + j == 0 {
                continue;
            }
            let d = bigraded_dimension(i, j).unwrap();
            assert_eq!(d, bigraded_dimension(j, i).unwrap());
            assert_eq!(lyndon_words_with_bidegree(i, j).len() as u128, d);
        }
    }
}

#[test]
fn standard_factorization_matches_oracle() {
    for n in 2..=12 {
        for w in lyndon_basis(n).unwrap() {
            let (u, v) = w.standard_factorization().unwrap();
            let (a, b) = words::standard_factorization(&bytes(&w)).unwrap();
            assert_eq!((bytes(&u), bytes(&v)), (a, b));
        }
    }
}

fn element(seed: u64, pool: &WordPool, d: usize) -> LieElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_element(&mut rng, pool, d, 1, pool.max_degree(), 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_matches_associative_embedding(a in any::<u64>(), b in any::<u64>()) {
        let d = 8;
        let alg = FreeLieAlgebra::new(d).unwrap();
        let pool = WordPool::new(5);
        let x = element(a, &pool, d);
        let y = element(b, &pool, d);
        let ours = alg.bracket(&x, &y).unwrap();
        prop_assert_eq!(coeffs(&ours), assoc::bracket_lyndon(&coeffs(&x), &coeffs(&y), d));
    }

    #[test]
    fn antisymmetry_and_jacobi(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let d = 8;
        let alg = FreeLieAlgebra::new(d).unwrap();
        let pool = WordPool::new(4);
        let (x, y, z) = (element(a, &pool, d), element(b, &pool, d), element(c, &pool, d));
        let br = |u: &LieElement, v: &LieElement| alg.bracket(u, v).unwrap();
        prop_assert!((br(&x, &y) + br(&y, &x)).is_zero());
        prop_assert!(br(&x, &x).is_zero());
        let jacobi = br(&x, &br(&y, &z)) + br(&y, &br(&z, &x)) + br(&z, &br(&x, &y));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn bracket_is_bilinear(a in any::<u64>(), b in any::<u64>(), c in any::<u64>(), k in -4i64..=4) {
        let d = 7;
        let alg = FreeLieAlgebra::new(d).unwrap();
        let pool = WordPool::new(4);
        let (x, y, z) = (element(a, &pool, d), element(b, &pool, d), element(c, &pool, d));
        let lhs = alg.bracket(&(&x.scale(&q(k)) + &y), &z).unwrap();
        let rhs = alg.bracket(&x, &z).unwrap().scale(&q(k)) + alg.bracket(&y, &z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_respects_bigrading(a in any::<u64>(), b in any::<u64>()) {
        let d = 9;
        let alg = FreeLieAlgebra::new(d).unwrap();
        let pool = WordPool::new(4);
        let x = element(a, &pool, d);
        let y = element(b, &pool, d);
        for (u, cu) in x.terms() {
            for (v, cv) in y.terms() {
                let bu = LieElement::from_terms([(u.clone(), cu.clone())], d);
                let bv = LieElement::from_terms([(v.clone(), cv.clone())], d);
                let (i, j) = (u.bidegree().0 + v.bidegree().0, u.bidegree().1 + v.bidegree().1);
                for (w, _) in alg.bracket(&bu, &bv).unwrap().terms() {
                    prop_assert_eq!(w.bidegree(), (i, j));
                }
            }
        }
    }
}

#[test]
fn rewriting_random_trees() {
    let d = 8;
    let alg = FreeLieAlgebra::new(d).unwrap();
    let magma = MagmaLie::new(d);
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..50 {
        let degree = rand::Rng::random_range(&mut rng, 1..=d);
        let tree = random_tree(&mut rng, degree);
        let ours = alg.evaluate(&tree).unwrap();
        assert_eq!(
            coeffs(&ours),
            assoc::expand(assoc::eval_tree(&oracle_tree(&tree))),
            "{tree}"
        );
        // tree - sum c_w P_w vanishes modulo antisymmetry and Jacobi
        let mut terms = vec![(q(1), oracle_tree(&tree))];
        for (w, c) in ours.terms() {
            terms.push((-c.clone(), Tree::standard(&bytes(w))));
        }
        assert!(magma.is_zero(&terms), "{tree}");
    }
}

#[test]
fn rewriting_linear_combinations() {
    let alg = FreeLieAlgebra::new(6).unwrap();
    let t: BracketTree = "[[e,f],[e,[e,f]]]".parse().unwrap();
    let s: BracketTree = "[e,[[e,f],[e,f]]]".parse().unwrap();
    let expr = LieExpression::new().with(q(3), t.clone()).with(q(-2), s);
    let x = alg.rewrite_to_basis(&expr).unwrap();
    assert_eq!(x, alg.evaluate(&t).unwrap().scale(&q(3)));
    assert_eq!(x, unip_core::freelie::rewrite_to_basis(&expr, 6).unwrap());
}

#[test]
fn oversized_input_tree_is_an_error() {
    let alg = FreeLieAlgebra::new(4).unwrap();
    let t: BracketTree = "[e,[e,[e,[e,f]]]]".parse().unwrap();
    assert_eq!(
        alg.evaluate(&t),
        Err(unip_core::LieError::DegreeOverflow {
            degree: 5,
            truncation: 4
        })
    );
    assert_eq!(
        FreeLieAlgebra::new(5).unwrap().evaluate(&t).unwrap().len(),
        1
    );
}

#[test]
fn products_above_truncation_are_dropped() {
    let alg = FreeLieAlgebra::new(4).unwrap();
    let x = alg.evaluate(&"[e,[e,f]]".parse().unwrap()).unwrap();
    let y = alg.evaluate(&"[f,[e,f]]".parse().unwrap()).unwrap();
    assert!(alg.bracket(&x, &y).unwrap().is_zero());
    assert!(!FreeLieAlgebra::new(6)
        .unwrap()
        .bracket(
            &LieElement::from_terms(x.terms().map(|(w, c)| (w.clone(), c.clone())), 6),
            &LieElement::from_terms(y.terms().map(|(w, c)| (w.clone(), c.clone())), 6),
        )
        .unwrap()
        .is_zero());
}

mod common;

use common::q;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unip_core::freelie::{bigraded_dimension, FreeLieAlgebra, Generator, LieElement, LyndonWord};
use unip_core::galois::sampling::{
    random_automorphism, random_element, AutomorphismShape, WordPool,
};
use unip_core::galois::{
    character_of_graded_piece, check_leading_term, dual_twist, minus_eigenspace_dimension,
    sigma_involution, sigma_matrix_on_w, CharacterLabel,
};
use unip_core::wquotient::{
    in_ideal, project_to_w, w_graded_basis, w_graded_dimension, Bidegree, FiltrationIdeal,
};
use unip_oracles::magma::MagmaLie;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn w_dimensions_from_bigraded_counts() {
    assert_eq!(w_graded_dimension(1).unwrap(), 2);
    assert_eq!(
        w_graded_dimension(2).unwrap() as u128,
        bigraded_dimension(1, 1).unwrap()
    );
    for n in 3..=32 {
        let expected =
            bigraded_dimension(n - 1, 1).unwrap() + bigraded_dimension(1, n - 1).unwrap();
        assert_eq!(
            w_graded_dimension(n).unwrap() as u128,
            expected,
            "level {n}"
        );
        assert_eq!(w_graded_basis(n).unwrap().len() as u128, expected);
    }
}

#[test]
fn w_dimensions_from_magma_quotient() {
    let magma = MagmaLie::new(6);
    for n in 1..=6 {
        let surviving: usize = (0..=n)
            .filter(|i| *i < 2 || n - i < 2)
            .map(|i| magma.bigraded_dimension(i, n - i))
            .sum();
        assert_eq!(w_graded_dimension(n).unwrap(), surviving, "level {n}");
    }
}

#[test]
fn filtration_pieces_are_ideals() {
    let d = 8;
    let alg = FreeLieAlgebra::new(d).unwrap();
    let pool = WordPool::new(5);
    let mut r = rng(3);
    for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)] {
        let ideal = FiltrationIdeal::new(n, m);
        for _ in 0..20 {
            let x = random_element(&mut r, &pool, d, 1, 5, 4);
            let y =
                random_element(&mut r, &pool, d, 1, 5, 6).retain_words(|w| ideal.contains_word(w));
            assert!(in_ideal(&y, n, m));
            assert!(ideal.contains(&alg.bracket(&x, &y).unwrap()));
        }
    }
}

#[test]
fn projection_is_a_homomorphism() {
    let d = 9;
    let alg = FreeLieAlgebra::new(d).unwrap();
    let pool = WordPool::new(5);
    let mut r = rng(4);
    for _ in 0..40 {
        let x = random_element(&mut r, &pool, d, 1, 5, 4);
        let y = random_element(&mut r, &pool, d, 1, 5, 4);
        let lhs = project_to_w(&alg.bracket(&x, &y).unwrap());
        let rhs = project_to_w(&x).bracket(&project_to_w(&y), &alg).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn automorphisms_respect_brackets() {
    let d = 7;
    let alg = FreeLieAlgebra::new(d).unwrap();
    let pool = WordPool::new(d);
    let small = WordPool::new(4);
    let mut r = rng(5);
    for _ in 0..100 {
        let phi = random_automorphism(&mut r, &alg, &pool, AutomorphismShape::default());
        let x = random_element(&mut r, &small, d, 1, 4, 3);
        let y = random_element(&mut r, &small, d, 1, 3, 3);
        let lhs = phi.apply(&alg, &alg.bracket(&x, &y).unwrap()).unwrap();
        let rhs = alg
            .bracket(&phi.apply(&alg, &x).unwrap(), &phi.apply(&alg, &y).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn composition_matches_sequential_application() {
    let d = 6;
    let alg = FreeLieAlgebra::new(d).unwrap();
    let pool = WordPool::new(d);
    let mut r = rng(6);
    for _ in 0..20 {
        let phi = random_automorphism(&mut r, &alg, &pool, AutomorphismShape::default());
        let psi = random_automorphism(&mut r, &alg, &pool, AutomorphismShape::default());
        let both = phi.after(&psi, &alg).unwrap();
        let x = random_element(&mut r, &pool, d, 1, 4, 4);
        let sequential = phi.apply(&alg, &psi.apply(&alg, &x).unwrap()).unwrap();
        assert_eq!(both.apply(&alg, &x).unwrap(), sequential);
        assert_eq!(both.c(), &(phi.c() * psi.c()));
    }
}

#[test]
fn leading_terms_under_random_automorphisms() {
    let d = 7;
    let alg = FreeLieAlgebra::new(d).unwrap();
    let pool = WordPool::new(d);
    let mut r = rng(7);
    for _ in 0..20 {
        let phi = random_automorphism(&mut r, &alg, &pool, AutomorphismShape::default());
        for report in check_leading_term(&alg, &phi, d - 1).unwrap() {
            assert!(report.filtration_stable, "{}", report.word);
            assert!(report.guaranteed, "{}", report.word);
        }
    }
    let diagonal = AutomorphismShape {
        diagonal: true,
        ..AutomorphismShape::default()
    };
    let phi = random_automorphism(&mut r, &alg, &pool, diagonal);
    assert!(check_leading_term(&alg, &phi, d - 1)
        .unwrap()
        .iter()
        .all(|t| t.literal && t.remainder.is_zero()));
}

#[test]
fn sigma_is_an_involutive_automorphism() {
    let d = 10;
    let alg = FreeLieAlgebra::new(d).unwrap();
    let pool = WordPool::new(5);
    let mut r = rng(8);
    for _ in 0..30 {
        let x = random_element(&mut r, &pool, d, 1, 5, 4);
        let y = random_element(&mut r, &pool, d, 1, 5, 4);
        let sx = sigma_involution(&alg, &x).unwrap();
        assert_eq!(sigma_involution(&alg, &sx).unwrap(), x);
        let lhs = sigma_involution(&alg, &alg.bracket(&x, &y).unwrap()).unwrap();
        let rhs = alg
            .bracket(&sx, &sigma_involution(&alg, &y).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
    for n in 1..=d {
        for w in unip_core::freelie::lyndon_basis(n).unwrap() {
            let (i, j) = w.bidegree();
            let image = sigma_involution(&alg, &alg.basis(w).unwrap()).unwrap();
            assert!(image.terms().all(|(v, _)| v.bidegree() == (j, i)));
        }
    }
}

#[test]
fn sigma_matrix_is_signed_swap() {
    for n in 3..=10 {
        let m = sigma_matrix_on_w(n).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!((m[0][0].clone(), m[1][1].clone()), (q(0), q(0)));
        assert_eq!(&m[0][1] * &m[1][0], q(1));
        assert_eq!(minus_eigenspace_dimension(n).unwrap(), 1);
    }
    assert_eq!(sigma_matrix_on_w(2).unwrap(), vec![vec![q(-1)]]);
}

#[test]
fn sigma_sends_e_branch_to_minus_f_branch() {
    for n in 3..=10 {
        let alg = FreeLieAlgebra::new(n).unwrap();
        let ef = alg.bracket(&alg.e(), &alg.f()).unwrap();
        let xe = alg.ad_power(Generator::E, n - 2, &ef).unwrap();
        let xf = alg.ad_power(Generator::F, n - 2, &ef).unwrap();
        let image = project_to_w(&sigma_involution(&alg, &xe).unwrap());
        assert_eq!(image, project_to_w(&-&xf), "level {n}");
    }
}

#[test]
fn character_labels() {
    let labels = [
        CharacterLabel::new(3, 1),
        CharacterLabel::new(-2, 5),
        CharacterLabel::TRIVIAL,
    ];
    for l in labels {
        assert_eq!(l.dual().dual(), l);
        assert_eq!(dual_twist(dual_twist(l)), l);
        assert_eq!(l.sigma().sigma(), l);
        assert_eq!(l.twist(2).twist(-2), l);
        assert_eq!(dual_twist(l), l.dual().twist(1));
    }
    assert_eq!(
        CharacterLabel::new(3, 1).dual_twist(),
        CharacterLabel::new(-2, 0)
    );
    for n in 3..=12 {
        let g = character_of_graded_piece(n).unwrap();
        assert_eq!(g.dimension(), w_graded_dimension(n).unwrap());
        assert_eq!(
            g.minus_eigenspace_dimension(),
            minus_eigenspace_dimension(n).unwrap()
        );
        assert_eq!(g.characters[0].sigma(), g.characters[1]);
        // characters follow the bidegree of the surviving words
        let words: Vec<(usize, usize)> = w_graded_basis(n)
            .unwrap()
            .iter()
            .map(LyndonWord::bidegree)
            .collect();
        let from_chars: Vec<(usize, usize)> = g
            .characters
            .iter()
            .map(|c| (c.a as usize, c.b as usize))
            .collect();
        assert_eq!(words, from_chars);
    }
    assert!(character_of_graded_piece(1).is_err());
}

#[test]
fn leading_scalars_multiply() {
    let phi = unip_core::galois::LieAutomorphism::diagonal(q(2), q(3), 6).unwrap();
    assert_eq!(phi.leading_scalar(Bidegree::new(2, 1)), q(12));
    let alg = FreeLieAlgebra::new(6).unwrap();
    let x = LieElement::basis("EEF".parse().unwrap(), 6);
    assert_eq!(phi.apply(&alg, &x).unwrap(), x.scale(&q(12)));
}

use alloc::vec::Vec;

use num_traits::One;

use super::automorphism::apply_homomorphism;
use crate::error::LieError;
use crate::freelie::{FreeLieAlgebra, LieElement};
use crate::linalg::rank;
use crate::wquotient::{project_to_w, w_graded_basis};
use crate::Rational;

/// Levels at which the (-1)-eigenspace is computed from the matrix of
/// conjugation rather than taken from the closed form.
pub const MATRIX_LEVELS: usize = 16;

/// Complex conjugation as the Lie involution `e <-> f`.
pub fn sigma_involution(alg: &FreeLieAlgebra, x: &LieElement) -> Result<LieElement, LieError> {
    apply_homomorphism(alg, &alg.f(), &alg.e(), x)
}

/// Matrix of conjugation on `W^{n+1} \ W^n` in the basis
/// [`w_graded_basis`]; `matrix[row][col]` is the coefficient of basis word
/// `row` in the image of basis word `col`.
pub fn sigma_matrix_on_w(n: usize) -> Result<Vec<Vec<Rational>>, LieError> {
    let basis = w_graded_basis(n)?;
    let alg = FreeLieAlgebra::new(n)?;
    let images = basis
        .iter()
        .map(|w| {
            let image = sigma_involution(&alg, &alg.basis(w.clone())?)?;
            Ok(project_to_w(&image).into_inner())
        })
        .collect::<Result<Vec<_>, LieError>>()?;
    Ok(basis
        .iter()
        .map(|row| images.iter().map(|img| img.coefficient(row)).collect())
        .collect())
}

/// `dim (W^{n+1} \ W^n)^-`, the (-1)-eigenspace of conjugation, for
/// `n >= 2`.
pub fn minus_eigenspace_dimension(n: usize) -> Result<usize, LieError> {
    if n < 2 {
        return Err(LieError::LevelOutOfRange { level: n, min: 2 });
    }
    if n > MATRIX_LEVELS {
        return Ok(1);
    }
    let mut m = sigma_matrix_on_w(n)?;
    let size = m.len();
    for (k, row) in m.iter_mut().enumerate() {
        row[k] += Rational::one();
    }
    Ok(size - rank(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::{BracketTree, Generator, LyndonWord};
    use alloc::string::ToString;

    fn w(s: &str) -> LyndonWord {
        s.parse().unwrap()
    }

    #[test]
    fn sigma_examples() {
        let alg = FreeLieAlgebra::new(6).unwrap();
        assert_eq!(sigma_involution(&alg, &alg.e()).unwrap(), alg.f());
        let ef = alg.basis(w("EF")).unwrap();
        assert_eq!(sigma_involution(&alg, &ef).unwrap().to_string(), "-EF");
        let ef_tree = BracketTree::standard(&w("EF"));
        let a = alg
            .evaluate(&BracketTree::ad_power(Generator::E, 2, ef_tree.clone()))
            .unwrap();
        let b = alg
            .evaluate(&BracketTree::ad_power(Generator::F, 2, ef_tree))
            .unwrap();
        assert_eq!(sigma_involution(&alg, &a).unwrap(), -b);
    }

    #[test]
    fn minus_dimensions() {
        assert_eq!(minus_eigenspace_dimension(2).unwrap(), 1);
        assert_eq!(minus_eigenspace_dimension(3).unwrap(), 1);
        assert_eq!(minus_eigenspace_dimension(10).unwrap(), 1);
        assert_eq!(minus_eigenspace_dimension(40).unwrap(), 1);
        assert!(minus_eigenspace_dimension(1).is_err());
    }
}

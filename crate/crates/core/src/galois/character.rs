use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::LieError;

/// The formal character `chi^a chibar^b`. The Tate twist `Q_p(1)` is
/// `(1, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterLabel {
    pub a: i64,
    pub b: i64,
}

impl CharacterLabel {
    pub const TRIVIAL: CharacterLabel = CharacterLabel { a: 0, b: 0 };
    pub const CYCLOTOMIC: CharacterLabel = CharacterLabel { a: 1, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn dual(self) -> Self {
        Self::new(-self.a, -self.b)
    }

    /// Tensor with `Q_p(k)`.
    pub fn twist(self, k: i64) -> Self {
        Self::new(self.a + k, self.b + k)
    }

    /// Conjugation by complex conjugation exchanges `chi` and `chibar`.
    pub fn sigma(self) -> Self {
        Self::new(self.b, self.a)
    }

    /// `M*(1)`, the Tate dual.
    pub fn dual_twist(self) -> Self {
        self.dual().twist(1)
    }

    pub fn is_self_conjugate(self) -> bool {
        self.a == self.b
    }
}

impl fmt::Display for CharacterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

pub fn dual_twist(label: CharacterLabel) -> CharacterLabel {
    label.dual_twist()
}

/// The characters of `W^{n+1} \ W^n` as a Galois module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedModuleLabel {
    pub level: usize,
    pub characters: Vec<CharacterLabel>,
    /// Whether complex conjugation exchanges the two factors (with a sign).
    pub sigma_swaps: bool,
}

impl GradedModuleLabel {
    pub fn dimension(&self) -> usize {
        self.characters.len()
    }

    /// Dimension of the (-1)-eigenspace of complex conjugation: one vector
    /// for a swapped pair, and the whole line `Q_p(1)` at level 2, where
    /// conjugation acts by -1.
    pub fn minus_eigenspace_dimension(&self) -> usize {
        if self.sigma_swaps {
            self.characters.len() / 2
        } else {
            self.characters
                .iter()
                .filter(|c| c.is_self_conjugate())
                .count()
        }
    }
}

/// `Q_p(chi^{n-2}(1)) + Q_p(chibar^{n-2}(1))` for `n >= 3` and `Q_p(1)` at
/// `n = 2`.
pub fn character_of_graded_piece(n: usize) -> Result<GradedModuleLabel, LieError> {
    if n < 2 {
        return Err(LieError::LevelOutOfRange { level: n, min: 2 });
    }
    if n == 2 {
        return Ok(GradedModuleLabel {
            level: 2,
            characters: vec![CharacterLabel::CYCLOTOMIC],
            sigma_swaps: false,
        });
    }
    let k = n as i64 - 2;
    let chi = CharacterLabel::new(k, 0).twist(1);
    Ok(GradedModuleLabel {
        level: n,
        characters: vec![chi, chi.sigma()],
        sigma_swaps: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_pieces() {
        assert_eq!(
            character_of_graded_piece(2).unwrap().characters,
            [CharacterLabel::new(1, 1)]
        );
        let g3 = character_of_graded_piece(3).unwrap();
        assert_eq!(
            g3.characters,
            [CharacterLabel::new(2, 1), CharacterLabel::new(1, 2)]
        );
        assert!(g3.sigma_swaps);
        assert_eq!(
            character_of_graded_piece(5).unwrap().characters,
            [CharacterLabel::new(4, 1), CharacterLabel::new(1, 4)]
        );
        assert!(character_of_graded_piece(1).is_err());
        for n in 2..20 {
            assert_eq!(
                character_of_graded_piece(n)
                    .unwrap()
                    .minus_eigenspace_dimension(),
                1
            );
        }
    }

    #[test]
    fn duals() {
        assert_eq!(
            dual_twist(CharacterLabel::new(1, 1)),
            CharacterLabel::TRIVIAL
        );
        assert_eq!(
            dual_twist(CharacterLabel::new(4, 1)),
            CharacterLabel::new(-3, 0)
        );
        assert_eq!(
            dual_twist(CharacterLabel::new(1, 4)),
            CharacterLabel::new(0, -3)
        );
    }
}

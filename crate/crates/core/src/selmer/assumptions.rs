use alloc::collections::BTreeSet;

use crate::error::LedgerError;

/// Which non-vanishing input feeds the `H^2` vanishing argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AssumptionMode {
    /// `chi^k(L) != 0` and `chibar^k(Lbar) != 0` for every `k < 0`.
    RefinedNonVanishing,
    /// The `p`-adic `L`-functions have finitely many zeros; non-vanishing
    /// may fail at the listed twists.
    FiniteZeros,
}

/// Bound on `dim H^2(G_T, gr_n)` at a level where non-vanishing is not
/// assumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum H2Cap {
    Bounded(u64),
    /// An unknown finite dimension, carried as a named constant `C_n`.
    Symbolic,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AssumptionSet {
    mode: AssumptionMode,
    exceptional: BTreeSet<i64>,
    /// `None` means the conjugate side uses the same set.
    exceptional_conjugate: Option<BTreeSet<i64>>,
    h2_cap: H2Cap,
}

fn validate(set: &BTreeSet<i64>) -> Result<(), LedgerError> {
    match set.iter().find(|k| **k >= 0) {
        Some(k) => Err(LedgerError::NonNegativeTwist(*k)),
        None => Ok(()),
    }
}

impl AssumptionSet {
    pub fn refined_non_vanishing() -> Self {
        Self {
            mode: AssumptionMode::RefinedNonVanishing,
            exceptional: BTreeSet::new(),
            exceptional_conjugate: None,
            h2_cap: H2Cap::Symbolic,
        }
    }

    /// Non-vanishing may fail at the twists `k` in `exceptional` (all
    /// negative), on both the `chi` and `chibar` side.
    pub fn finite_zeros<I>(exceptional: I, h2_cap: H2Cap) -> Result<Self, LedgerError>
    where
        I: IntoIterator<Item = i64>,
    {
        let exceptional: BTreeSet<i64> = exceptional.into_iter().collect();
        validate(&exceptional)?;
        Ok(Self {
            mode: AssumptionMode::FiniteZeros,
            exceptional,
            exceptional_conjugate: None,
            h2_cap,
        })
    }

    /// Uses a separate exceptional set for the `chibar` side.
    pub fn with_conjugate_exceptional<I>(mut self, exceptional: I) -> Result<Self, LedgerError>
    where
        I: IntoIterator<Item = i64>,
    {
        let set: BTreeSet<i64> = exceptional.into_iter().collect();
        validate(&set)?;
        self.mode = AssumptionMode::FiniteZeros;
        self.exceptional_conjugate = Some(set);
        Ok(self)
    }

    pub fn mode(&self) -> AssumptionMode {
        self.mode
    }

    pub fn h2_cap(&self) -> H2Cap {
        self.h2_cap
    }

    pub fn exceptional(&self) -> &BTreeSet<i64> {
        &self.exceptional
    }

    pub fn exceptional_conjugate(&self) -> &BTreeSet<i64> {
        self.exceptional_conjugate
            .as_ref()
            .unwrap_or(&self.exceptional)
    }

    pub fn is_symmetric(&self) -> bool {
        self.exceptional_conjugate.is_none()
    }

    /// Whether non-vanishing is not assumed at twist `k` on either side.
    pub fn is_exceptional(&self, k: i64) -> bool {
        self.exceptional.contains(&k) || self.exceptional_conjugate().contains(&k)
    }

    /// No exceptional twists at all: the refined hypothesis in effect.
    pub fn is_refined(&self) -> bool {
        self.exceptional.is_empty() && self.exceptional_conjugate().is_empty()
    }

    /// Largest level `n = 2 - k` with `k` exceptional, if any.
    pub fn last_exceptional_level(&self) -> Option<usize> {
        let k = self
            .exceptional
            .iter()
            .chain(self.exceptional_conjugate().iter())
            .min()?;
        Some((2 - k) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        let a = AssumptionSet::finite_zeros([-1, -4], H2Cap::Bounded(1)).unwrap();
        assert!(a.is_exceptional(-4));
        assert!(!a.is_exceptional(-2));
        assert_eq!(a.last_exceptional_level(), Some(6));
        assert!(AssumptionSet::refined_non_vanishing().is_refined());
        assert!(AssumptionSet::finite_zeros([], H2Cap::Symbolic)
            .unwrap()
            .is_refined());
        assert_eq!(
            AssumptionSet::finite_zeros([-1, 0], H2Cap::Symbolic),
            Err(LedgerError::NonNegativeTwist(0))
        );
        let b = a.with_conjugate_exceptional([-7]).unwrap();
        assert!(b.is_exceptional(-7) && b.is_exceptional(-1));
        assert!(!b.is_symmetric());
        assert_eq!(b.last_exceptional_level(), Some(9));
    }
}

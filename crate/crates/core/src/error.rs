use thiserror::Error;

/// Errors from the free Lie algebra, the quotient `W` and the Galois layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("word is not a Lyndon word")]
    NotLyndon,
    #[error("could not parse bracket expression")]
    Parse,
    #[error("truncation degrees differ ({left} vs {right})")]
    TruncationMismatch { left: usize, right: usize },
    #[error("degree {degree} exceeds the truncation degree {truncation}")]
    DegreeOverflow { degree: usize, truncation: usize },
    #[error("truncation degree must be at least 1")]
    ZeroTruncation,
    #[error("level {level} is outside the supported range (need {min} or more)")]
    LevelOutOfRange { level: usize, min: usize },
    #[error("automorphism scalars must be nonzero")]
    ZeroScalar,
    #[error("generator perturbations must lie in degree 2 or more")]
    PerturbationDegree,
}

/// Errors from the Selmer dimension ledger.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LedgerError {
    #[error("level {level} is outside the formula's domain (need {min} or more)")]
    LevelOutOfRange { level: usize, min: usize },
    #[error("the graded local dimension at level 2 is not determined; use the total at level 2")]
    GradedLevelTwo,
    #[error("s = |S| must be at least 1 (S contains the infinite place)")]
    EmptyPlaceSet,
    #[error("exceptional twist {0} must be negative")]
    NonNegativeTwist(i64),
    #[error(transparent)]
    Lie(#[from] LieError),
}

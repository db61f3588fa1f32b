use core::fmt;

use super::bound::BoundValue;

/// An inference rule of the dimension ledger. Each carries a fixed
/// citation string describing the statement it applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    LocalBase,
    LocalH2Vanishing,
    LocalCrystalline,
    LocalGradedDimension,
    GlobalBase,
    GlobalRecursion,
    EulerCharacteristic,
    SigmaMinus,
    LocalDuality,
    PoitouTate,
    InflationRestriction,
    NonVanishing,
    ExceptionalTwist,
}

impl Rule {
    pub const ALL: [Rule; 13] = [
        Rule::LocalBase,
        Rule::LocalH2Vanishing,
        Rule::LocalCrystalline,
        Rule::LocalGradedDimension,
        Rule::GlobalBase,
        Rule::GlobalRecursion,
        Rule::EulerCharacteristic,
        Rule::SigmaMinus,
        Rule::LocalDuality,
        Rule::PoitouTate,
        Rule::InflationRestriction,
        Rule::NonVanishing,
        Rule::ExceptionalTwist,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::LocalBase => "local-base",
            Rule::LocalH2Vanishing => "local-h2",
            Rule::LocalCrystalline => "local-crystalline",
            Rule::LocalGradedDimension => "local-graded-dim",
            Rule::GlobalBase => "global-base",
            Rule::GlobalRecursion => "global-recursion",
            Rule::EulerCharacteristic => "euler-characteristic",
            Rule::SigmaMinus => "sigma-minus",
            Rule::LocalDuality => "local-duality",
            Rule::PoitouTate => "poitou-tate",
            Rule::InflationRestriction => "inflation-restriction",
            Rule::NonVanishing => "non-vanishing",
            Rule::ExceptionalTwist => "exceptional-twist",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Rule::LocalBase => "dim H1_f(G_p, W_2) = 2",
            Rule::LocalH2Vanishing => {
                "H2(G_p, gr_n) = 0 for n >= 3, so H1(G_p, W_n) -> H1(G_p, W_{n-1}) is surjective"
            }
            Rule::LocalCrystalline => {
                "Hodge filtration on D_dR(Q_p(chi^{n-2}(1))) is strictly negative, so H1_f = H1 on gr_n for n >= 3"
            }
            Rule::LocalGradedDimension => {
                "local Euler characteristic: H0 = H2 = 0 on the 2-dimensional gr_n, so dim H1(G_p, gr_n) = 2"
            }
            Rule::GlobalBase => {
                "H1_f(G_T, Q_p(1)) = Z_S^* (x) Q_p has dimension s - 1, so dim H1_f(G_T, W_2) <= r + s - 1"
            }
            Rule::GlobalRecursion => {
                "0 -> H1(G_T, gr_n) -> H1_f(G_T, W_n) -> H1_f(G_T, W_{n-1}) is exact for n >= 3"
            }
            Rule::EulerCharacteristic => {
                "global Euler characteristic: dim H1(G_T, M) = dim H2(G_T, M) + dim M^-"
            }
            Rule::SigmaMinus => {
                "complex conjugation exchanges the two characters of gr_n, so dim (gr_n W)^- = 1"
            }
            Rule::LocalDuality => {
                "local duality: H2(N_v, gr_n) = H0(N_v, chi^{2-n} + chibar^{2-n})^* = 0 for n >= 3, so Sha^2(gr_n) = H2(N_T, gr_n)"
            }
            Rule::PoitouTate => {
                "Poitou-Tate: Sha^2(gr_n) = Sha^1(Q_p(chi^{2-n}))^* + Sha^1(Q_p(chibar^{2-n}))^*"
            }
            Rule::InflationRestriction => {
                "inflation-restriction: Sha^1(Q_p(chi^k)) = Hom_Lambda(A (x) Q, Q_p(chi^k))"
            }
            Rule::NonVanishing => {
                "chi^k(L) != 0 and chibar^k(Lbar) != 0 at k = 2 - n while L annihilates A (x) Q, so the Hom groups vanish"
            }
            Rule::ExceptionalTwist => {
                "non-vanishing not assumed at k = 2 - n; dim H2(G_T, gr_n) bounded by the supplied cap"
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One justification step. The deltas are what the step contributes to the
/// local dimension and to the derived global bound of its level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraceStep {
    pub rule: Rule,
    pub local_delta: i64,
    pub global_delta: BoundValue,
}

impl TraceStep {
    pub fn note(rule: Rule) -> Self {
        Self {
            rule,
            local_delta: 0,
            global_delta: BoundValue::default(),
        }
    }

    pub fn local(rule: Rule, delta: i64) -> Self {
        Self {
            rule,
            local_delta: delta,
            global_delta: BoundValue::default(),
        }
    }

    pub fn global(rule: Rule, delta: BoundValue) -> Self {
        Self {
            rule,
            local_delta: 0,
            global_delta: delta,
        }
    }
}

/// Sums the deltas of a trace onto a starting point.
pub fn replay(start: (i64, BoundValue), trace: &[TraceStep]) -> (i64, BoundValue) {
    trace.iter().fold(start, |(local, global), step| {
        (local + step.local_delta, &global + &step.global_delta)
    })
}

#[cfg(test)]
pub(crate) fn rule_ids(trace: &[TraceStep]) -> alloc::vec::Vec<&'static str> {
    trace.iter().map(|s| s.rule.id()).collect()
}

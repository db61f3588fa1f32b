use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::assumptions::{AssumptionSet, H2Cap};
use super::bound::{AffineBound, BoundValue, Symbol};
use super::rules::{replay, Rule, TraceStep};
use crate::error::LedgerError;
use crate::galois::character_of_graded_piece;

fn require_level(n: usize, min: usize) -> Result<(), LedgerError> {
    if n < min {
        Err(LedgerError::LevelOutOfRange { level: n, min })
    } else {
        Ok(())
    }
}

fn require_places(s: u64) -> Result<(), LedgerError> {
    if s == 0 {
        Err(LedgerError::EmptyPlaceSet)
    } else {
        Ok(())
    }
}

/// `dim H^1_f(G_p, gr_n)` for `n >= 3`. Level 2 is rejected because only
/// the total `dim H^1_f(G_p, W_2)` is known.
pub fn local_h1f_graded(n: usize) -> Result<i64, LedgerError> {
    if n == 2 {
        return Err(LedgerError::GradedLevelTwo);
    }
    require_level(n, 3)?;
    // H1_f = H1 and, with H0 = H2 = 0, dim H1 = [Q_p : Q_p] * dim gr_n.
    Ok(character_of_graded_piece(n)?.dimension() as i64)
}

/// `dim H^1_f(G_p, W_n)` by telescoping the short exact sequences from the
/// base value 2 at `n = 2`.
pub fn local_h1f_total(n: usize) -> Result<i64, LedgerError> {
    require_level(n, 2)?;
    let mut total = 2;
    for level in 3..=n {
        total += local_h1f_graded(level)?;
    }
    debug_assert_eq!(total, 2 * n as i64 - 2);
    Ok(total)
}

/// What the ledger knows about `H^2(G_T, gr_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum H2Status {
    Vanishes,
    /// Non-vanishing is not assumed at this twist `k = 2 - n`.
    Conditional(i64),
    /// Not part of the argument at this level (level 2).
    Unknown,
}

impl fmt::Display for H2Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H2Status::Vanishes => write!(f, "vanishes"),
            H2Status::Conditional(k) => write!(f, "conditional({k})"),
            H2Status::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H2Assessment {
    pub status: H2Status,
    /// Upper bound on `dim H^2(G_T, gr_n)`.
    pub bound: BoundValue,
    pub trace: Vec<TraceStep>,
}

/// Runs the reduction local duality -> Poitou-Tate -> inflation-restriction
/// -> non-vanishing at level `n >= 3`.
pub fn h2_status(n: usize, assumptions: &AssumptionSet) -> Result<H2Assessment, LedgerError> {
    require_level(n, 3)?;
    let k = 2 - n as i64;
    let mut trace = vec![
        TraceStep::note(Rule::LocalDuality),
        TraceStep::note(Rule::PoitouTate),
        TraceStep::note(Rule::InflationRestriction),
    ];
    if !assumptions.is_exceptional(k) {
        trace.push(TraceStep::note(Rule::NonVanishing));
        return Ok(H2Assessment {
            status: H2Status::Vanishes,
            bound: BoundValue::concrete(0),
            trace,
        });
    }
    let bound = match assumptions.h2_cap() {
        H2Cap::Bounded(c) => BoundValue::concrete(c as i64),
        H2Cap::Symbolic => BoundValue::symbol(Symbol::H2AtLevel(n)),
    };
    trace.push(TraceStep::global(Rule::ExceptionalTwist, bound.clone()));
    Ok(H2Assessment {
        status: H2Status::Conditional(k),
        bound,
        trace,
    })
}

fn graded_global_steps(
    n: usize,
    assumptions: &AssumptionSet,
) -> Result<(H2Status, Vec<TraceStep>), LedgerError> {
    let minus = character_of_graded_piece(n)?.minus_eigenspace_dimension() as i64;
    let h2 = h2_status(n, assumptions)?;
    let mut trace = vec![
        TraceStep::note(Rule::GlobalRecursion),
        TraceStep::note(Rule::EulerCharacteristic),
        TraceStep::global(Rule::SigmaMinus, BoundValue::concrete(minus)),
    ];
    trace.extend(h2.trace);
    Ok((h2.status, trace))
}

/// `dim H^1(G_T, gr_n) = dim H^2 + dim (gr_n)^-` for `n >= 3`.
pub fn global_h1_graded_bound(
    n: usize,
    assumptions: &AssumptionSet,
) -> Result<BoundValue, LedgerError> {
    let (_, trace) = graded_global_steps(n, assumptions)?;
    Ok(replay((0, BoundValue::default()), &trace).1)
}

/// The global bound at one level, as the stated formula and as summed
/// from the ledger's own ingredients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalBounds {
    pub paper: BoundValue,
    pub derived: BoundValue,
}

/// `r + s + n - 2` when non-vanishing holds at every level, `C + n`
/// otherwise.
pub fn stated_aggregate(n: usize, r: u64, s: u64, assumptions: &AssumptionSet) -> BoundValue {
    if assumptions.is_refined() {
        BoundValue::concrete(r as i64 + s as i64 + n as i64 - 2)
    } else {
        BoundValue::concrete(n as i64) + BoundValue::symbol(Symbol::GlobalConstant)
    }
}

pub fn global_h1f_bound(
    n: usize,
    r: u64,
    s: u64,
    assumptions: &AssumptionSet,
) -> Result<GlobalBounds, LedgerError> {
    require_level(n, 2)?;
    require_places(s)?;
    let base = BoundValue::concrete(r as i64 + s as i64 - 1);
    let mut derived = base.clone();
    for level in 3..=n {
        derived = &derived + &global_h1_graded_bound(level, assumptions)?;
    }
    let paper = if n == 2 {
        base
    } else {
        stated_aggregate(n, r, s, assumptions)
    };
    Ok(GlobalBounds { paper, derived })
}

/// Local dimension against both global bounds at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub n: usize,
    pub local: i64,
    /// The stated aggregate `r + s + n - 2` (or `C + n`).
    pub paper_bound: BoundValue,
    pub derived_bound: BoundValue,
    /// `None` when the answer depends on unknown constants.
    pub strict_paper: Option<bool>,
    pub strict_derived: Option<bool>,
}

pub fn compare_dimensions(
    n: usize,
    r: u64,
    s: u64,
    assumptions: &AssumptionSet,
) -> Result<Comparison, LedgerError> {
    let bounds = global_h1f_bound(n, r, s, assumptions)?;
    let local = local_h1f_total(n)?;
    let paper_bound = stated_aggregate(n, r, s, assumptions);
    Ok(Comparison {
        n,
        local,
        strict_paper: paper_bound.strictly_below(local),
        strict_derived: bounds.derived.strictly_below(local),
        paper_bound,
        derived_bound: bounds.derived,
    })
}

/// First level of strict inequality: `r + s + 1` for the stated bound and
/// `r + s` (at least 2) for the ledger's sharper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Threshold {
    pub paper: usize,
    pub derived: usize,
}

pub fn theorem_threshold(r: u64, s: u64) -> Result<Threshold, LedgerError> {
    require_places(s)?;
    let paper = (r + s + 1) as usize;
    Ok(Threshold {
        paper,
        derived: ((r + s) as usize).max(2),
    })
}

/// One level of the ledger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerRow {
    pub n: usize,
    pub local_dim: i64,
    pub global_bound_paper: BoundValue,
    pub stated_aggregate: BoundValue,
    pub global_bound_derived: BoundValue,
    pub h2_status: H2Status,
    pub strict_paper: Option<bool>,
    pub strict_derived: Option<bool>,
    pub trace: Vec<TraceStep>,
}

impl LedgerRow {
    /// Recomputes `(local_dim, global_bound_derived)` from the previous
    /// row's values and this row's trace.
    pub fn replay(&self, previous: Option<&LedgerRow>) -> (i64, BoundValue) {
        let start = previous.map_or((0, BoundValue::default()), |p| {
            (p.local_dim, p.global_bound_derived.clone())
        });
        replay(start, &self.trace)
    }
}

/// Where strict inequality sets in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Crossing {
    Exact(usize),
    /// At most `max(floor, base + sum(symbols))`.
    AtMost {
        floor: usize,
        base: i64,
        symbols: Vec<Symbol>,
    },
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Crossing::Exact(n) => write!(f, "{n}"),
            Crossing::AtMost {
                floor,
                base,
                symbols,
            } => {
                write!(f, "<= max({floor}, {base}")?;
                for s in symbols {
                    write!(f, " + {s}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Large-`n` behaviour of the ledger under one assumption set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticVerdict {
    pub local: AffineBound,
    pub paper: AffineBound,
    pub derived: AffineBound,
    /// Strict inequality for all sufficiently large `n`.
    pub eventually_strict: bool,
    /// Least `n` with strict inequality against the derived bound.
    pub first_strict_derived: Crossing,
    /// Least `N` with strict inequality for every `n >= N`.
    pub strict_from_derived: Crossing,
    /// Least strict level for the stated bound, when it is concrete.
    pub first_strict_paper: Option<usize>,
}

fn exceptional_levels(assumptions: &AssumptionSet) -> Vec<usize> {
    let mut levels: Vec<usize> = assumptions
        .exceptional()
        .iter()
        .chain(assumptions.exceptional_conjugate().iter())
        .map(|k| (2 - k) as usize)
        .collect();
    levels.sort_unstable();
    levels.dedup();
    levels
}

pub fn asymptotic_verdict(
    r: u64,
    s: u64,
    assumptions: &AssumptionSet,
) -> Result<AsymptoticVerdict, LedgerError> {
    require_places(s)?;
    let rs = r as i64 + s as i64;
    let levels = exceptional_levels(assumptions);
    let last = levels.last().copied().unwrap_or(2);
    let symbolic = !levels.is_empty() && assumptions.h2_cap() == H2Cap::Symbolic;
    let cap = match assumptions.h2_cap() {
        H2Cap::Bounded(c) => c as i64,
        H2Cap::Symbolic => 0,
    };

    let symbols: Vec<Symbol> = if symbolic {
        levels.iter().map(|n| Symbol::H2AtLevel(*n)).collect()
    } else {
        Vec::new()
    };
    let derived = AffineBound::new(1, rs - 3 + cap * levels.len() as i64, symbols.clone(), last);
    let local = AffineBound::new(2, -2, Vec::new(), 2);
    let paper = if assumptions.is_refined() {
        AffineBound::new(1, rs - 2, Vec::new(), 2)
    } else {
        AffineBound::new(1, 0, vec![Symbol::GlobalConstant], last)
    };

    // gap(n) = local(n) - derived(n); gap(n) - gap(n - 1) = 1 - dim H2 at n.
    let mut gap = 2 - (rs - 1);
    let mut first = (gap > 0).then_some(2);
    let mut last_bad = (gap <= 0).then_some(2);
    let first_unknown = levels.first().copied().filter(|_| symbolic);
    for n in 3..=last {
        if Some(n) == first_unknown {
            break;
        }
        gap += 1 - if levels.binary_search(&n).is_ok() {
            cap
        } else {
            0
        };
        if gap > 0 && first.is_none() {
            first = Some(n);
        }
        if gap <= 0 {
            last_bad = Some(n);
        }
    }

    let (first_strict_derived, strict_from_derived) = if symbolic {
        let bound = Crossing::AtMost {
            floor: last,
            base: rs,
            symbols,
        };
        (first.map_or(bound.clone(), Crossing::Exact), bound)
    } else {
        let tail = (last as i64 + 1 - gap) as usize;
        let first = first.unwrap_or(tail);
        let from = if gap > 0 {
            last_bad.map_or(2, |b| b + 1)
        } else {
            tail
        };
        (Crossing::Exact(first), Crossing::Exact(from))
    };

    let first_strict_paper = assumptions
        .is_refined()
        .then(|| theorem_threshold(r, s).map(|t| t.paper))
        .transpose()?;

    Ok(AsymptoticVerdict {
        eventually_strict: derived.eventually_below(&local) == Some(true),
        local,
        paper,
        derived,
        first_strict_derived,
        strict_from_derived,
        first_strict_paper,
    })
}

/// Per-level ledger for fixed `(r, s)` and assumptions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelmerLedger {
    pub r: u64,
    pub s: u64,
    pub assumptions: AssumptionSet,
    pub rows: Vec<LedgerRow>,
}

impl SelmerLedger {
    /// Rows for levels `2..=max_level`.
    pub fn build(
        r: u64,
        s: u64,
        assumptions: AssumptionSet,
        max_level: usize,
    ) -> Result<Self, LedgerError> {
        require_level(max_level, 2)?;
        require_places(s)?;
        let mut rows: Vec<LedgerRow> = Vec::with_capacity(max_level - 1);
        for n in 2..=max_level {
            let (h2, trace) = if n == 2 {
                let trace = vec![
                    TraceStep::local(Rule::LocalBase, 2),
                    TraceStep::global(
                        Rule::GlobalBase,
                        BoundValue::concrete(r as i64 + s as i64 - 1),
                    ),
                ];
                (H2Status::Unknown, trace)
            } else {
                let mut trace = vec![
                    TraceStep::note(Rule::LocalH2Vanishing),
                    TraceStep::note(Rule::LocalCrystalline),
                    TraceStep::local(Rule::LocalGradedDimension, local_h1f_graded(n)?),
                ];
                let (h2, global) = graded_global_steps(n, &assumptions)?;
                trace.extend(global);
                (h2, trace)
            };
            let mut row = LedgerRow {
                n,
                local_dim: 0,
                global_bound_paper: BoundValue::default(),
                stated_aggregate: stated_aggregate(n, r, s, &assumptions),
                global_bound_derived: BoundValue::default(),
                h2_status: h2,
                strict_paper: None,
                strict_derived: None,
                trace,
            };
            let (local, derived) = row.replay(rows.last());
            row.local_dim = local;
            row.global_bound_paper = if n == 2 {
                derived.clone()
            } else {
                row.stated_aggregate.clone()
            };
            row.strict_paper = row.stated_aggregate.strictly_below(local);
            row.strict_derived = derived.strictly_below(local);
            row.global_bound_derived = derived;
            rows.push(row);
        }
        Ok(Self {
            r,
            s,
            assumptions,
            rows,
        })
    }

    pub fn verdict(&self) -> Result<AsymptoticVerdict, LedgerError> {
        asymptotic_verdict(self.r, self.s, &self.assumptions)
    }
}

//! Dimension ledger for the Selmer varieties of the quotients `W_n`.
//!
//! Local dimensions `dim H^1_f(G_p, W_n)` and upper bounds for the global
//! `dim H^1_f(G_T, W_n)` are assembled level by level from inference rules
//! conditioned on an [`AssumptionSet`]. Each ledger row carries its trace of
//! rules; replaying a trace recomputes the row's numbers. The stated bound
//! `r + s + n - 2` and the bound summed from the ledger's own ingredients
//! (one less for `n >= 3`) are reported side by side.
//!
//! `r` (the Selmer rank of `V_p(E)`) and `s = |S|` are inputs.

mod assumptions;
mod bound;
mod ledger;
mod rules;

pub use assumptions::{AssumptionMode, AssumptionSet, H2Cap};
pub use bound::{AffineBound, BoundValue, Symbol};
pub use ledger::{
    asymptotic_verdict, compare_dimensions, global_h1_graded_bound, global_h1f_bound, h2_status,
    local_h1f_graded, local_h1f_total, stated_aggregate, theorem_threshold, AsymptoticVerdict,
    Comparison, Crossing, GlobalBounds, H2Assessment, H2Status, LedgerRow, SelmerLedger, Threshold,
};
pub use rules::{replay, Rule, TraceStep};

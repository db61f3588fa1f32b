use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use unip_core::freelie::{
    bigraded_dimension, lyndon_basis, witt_dimension, BracketTree, FreeLieAlgebra, LyndonWord,
};
use unip_core::galois::sampling::{random_automorphism, AutomorphismShape, WordPool};
use unip_core::galois::{
    character_of_graded_piece, check_leading_term, minus_eigenspace_dimension,
};
use unip_core::selmer::{
    local_h1f_total, theorem_threshold, AssumptionMode, AssumptionSet, BoundValue, Crossing, H2Cap,
    Rule, SelmerLedger, TraceStep,
};
use unip_core::wquotient::{survives_in_w, w_graded_basis};

use crate::report::Report;

pub const MAX_WITT_DEGREE: usize = 64;
pub const MAX_BASIS_DEGREE: usize = 20;
pub const MAX_W_LEVEL: usize = 64;
pub const MAX_CHECK_DEGREE: usize = 10;

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments; exit code 2.
    Usage(String),
}

pub type Outcome = Result<(Report, bool), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn in_range(name: &str, v: usize, lo: usize, hi: usize) -> Result<(), Failure> {
    if (lo..=hi).contains(&v) {
        Ok(())
    } else {
        Err(usage(format!("{name} must lie in {lo}..={hi}, got {v}")))
    }
}

fn word_list(words: &[LyndonWord]) -> Value {
    words.iter().map(|w| Value::from(w.to_string())).collect()
}

pub fn witt(max_degree: usize) -> Outcome {
    in_range("--max-degree", max_degree, 1, MAX_WITT_DEGREE)?;
    let mut report = Report::new("witt", &["n", "dim", "bigraded_sum", "consistent"]);
    report.meta("max_degree", max_degree);
    let mut ok = true;
    for n in 1..=max_degree {
        let dim = witt_dimension(n).map_err(|e| usage(e.to_string()))?;
        let sum: u128 = (0..=n)
            .map(|i| bigraded_dimension(i, n - i).unwrap_or(0))
            .sum();
        ok &= sum == dim;
        report.push(vec![n.into(), big(dim), big(sum), (sum == dim).into()]);
    }
    Ok((report, ok))
}

/// Counts exceed `u64` beyond degree 64 only; keep them numeric when they fit.
fn big(x: u128) -> Value {
    u64::try_from(x)
        .map(Value::from)
        .unwrap_or_else(|_| Value::from(x.to_string()))
}

pub fn basis(max_degree: usize) -> Outcome {
    in_range("--max-degree", max_degree, 1, MAX_BASIS_DEGREE)?;
    let mut report = Report::new(
        "basis",
        &["n", "word", "bidegree", "bracket", "survives_in_w"],
    );
    report.meta("max_degree", max_degree);
    for n in 1..=max_degree {
        for w in lyndon_basis(n).map_err(|e| usage(e.to_string()))? {
            let (i, j) = w.bidegree();
            report.push(vec![
                n.into(),
                w.to_string().into(),
                format!("({i},{j})").into(),
                BracketTree::standard(&w).to_string().into(),
                survives_in_w(&w).into(),
            ]);
        }
    }
    Ok((report, true))
}

pub fn wgraded(max_level: usize) -> Outcome {
    in_range("--max-level", max_level, 1, MAX_W_LEVEL)?;
    let mut report = Report::new(
        "wgraded",
        &["n", "dim", "words", "characters", "minus_dim", "note"],
    );
    report.meta("max_level", max_level);
    for n in 1..=max_level {
        let words = w_graded_basis(n).map_err(|e| usage(e.to_string()))?;
        let (characters, minus, note): (Vec<String>, usize, &str) = if n == 1 {
            // e and f carry the characters of their own bidegrees; sigma swaps them
            (vec!["(1,0)".into(), "(0,1)".into()], 1, "generators")
        } else {
            let label = character_of_graded_piece(n).map_err(|e| usage(e.to_string()))?;
            let minus = minus_eigenspace_dimension(n).map_err(|e| usage(e.to_string()))?;
            let note = if n == 2 {
                "spanned by [e,f] alone; the two-character description starts at level 3"
            } else {
                ""
            };
            (
                label.characters.iter().map(ToString::to_string).collect(),
                minus,
                note,
            )
        };
        report.push(vec![
            n.into(),
            words.len().into(),
            word_list(&words),
            characters.into_iter().map(Value::from).collect(),
            minus.into(),
            note.into(),
        ]);
    }
    Ok((report, true))
}

struct Trial {
    index: usize,
    c: String,
    cbar: String,
    z: String,
    zprime: String,
    words: usize,
    filtration_failures: usize,
    guaranteed_failures: usize,
    literal_failures: usize,
    witness: Option<(String, String)>,
}

fn run_trial(
    alg: &FreeLieAlgebra,
    pool: &WordPool,
    seed: u64,
    index: usize,
    max_degree: usize,
    shape: AutomorphismShape,
) -> Trial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let phi = random_automorphism(&mut rng, alg, pool, shape);
    let reports = check_leading_term(alg, &phi, max_degree).expect("degree fits the truncation");
    let witness = reports
        .iter()
        .find(|r| !r.literal)
        .map(|r| (r.word.to_string(), r.remainder.to_string()));
    Trial {
        index,
        c: phi.c().to_string(),
        cbar: phi.cbar().to_string(),
        z: phi.z().to_string(),
        zprime: phi.zprime().to_string(),
        words: reports.len(),
        filtration_failures: reports.iter().filter(|r| !r.filtration_stable).count(),
        guaranteed_failures: reports.iter().filter(|r| !r.guaranteed).count(),
        literal_failures: reports.iter().filter(|r| !r.literal).count(),
        witness,
    }
}

pub fn galois_check(seed: u64, trials: usize, max_degree: usize, diagonal: bool) -> Outcome {
    in_range("--max-degree", max_degree, 1, MAX_CHECK_DEGREE)?;
    if trials == 0 {
        return Err(usage("--trials must be positive"));
    }
    let truncation = max_degree + 1;
    let alg = FreeLieAlgebra::new(truncation).map_err(|e| usage(e.to_string()))?;
    let pool = WordPool::new(truncation);
    let shape = AutomorphismShape {
        diagonal,
        ..AutomorphismShape::default()
    };
    let mut results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|k| run_trial(&alg, &pool, seed, k, max_degree, shape))
        .collect();
    results.sort_by_key(|t| t.index);

    let mut report = Report::new(
        "galois-check",
        &[
            "trial",
            "c",
            "cbar",
            "z",
            "zprime",
            "words_checked",
            "filtration_failures",
            "guaranteed_failures",
            "literal_failures",
            "literal_witness",
            "literal_witness_remainder",
        ],
    );
    report
        .meta("seed", seed)
        .meta("trials", trials)
        .meta("max_degree", max_degree)
        .meta("truncation", truncation);
    report.meta("diagonal", diagonal);
    let count = |f: fn(&Trial) -> bool| results.iter().filter(|t| f(t)).count();
    let guaranteed_pass = count(|t| t.guaranteed_failures == 0 && t.filtration_failures == 0);
    let literal_pass = count(|t| t.literal_failures == 0);
    for t in &results {
        let (w, rem) = match &t.witness {
            Some((w, r)) => (Value::from(w.clone()), Value::from(r.clone())),
            None => (Value::Null, Value::Null),
        };
        report.push(vec![
            t.index.into(),
            t.c.clone().into(),
            t.cbar.clone().into(),
            t.z.clone().into(),
            t.zprime.clone().into(),
            t.words.into(),
            t.filtration_failures.into(),
            t.guaranteed_failures.into(),
            t.literal_failures.into(),
            w,
            rem,
        ]);
    }
    let mut summary = Map::new();
    summary.insert("trials".into(), trials.into());
    summary.insert("guaranteed_pass".into(), guaranteed_pass.into());
    summary.insert("literal_pass".into(), literal_pass.into());
    summary.insert("all_guaranteed".into(), (guaranteed_pass == trials).into());
    report.summary = Some(("summary", summary));
    Ok((report, guaranteed_pass == trials))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    #[value(name = "theorem-0-2")]
    Refined,
    #[value(name = "finite-zeros")]
    FiniteZeros,
}

pub struct SelmerArgs {
    pub r: u64,
    pub s: u64,
    pub mode: Mode,
    pub exceptional: Vec<i64>,
    pub h2_cap: H2Cap,
    pub max_level: usize,
}

fn crossing_value(c: &Crossing) -> Value {
    match c {
        Crossing::Exact(n) => (*n).into(),
        other => other.to_string().into(),
    }
}

/// `rule`, with the nonzero contributions in parentheses.
fn step_text(t: &TraceStep) -> String {
    let mut parts = Vec::new();
    if t.local_delta != 0 {
        parts.push(format!("local {:+}", t.local_delta));
    }
    if t.global_delta != BoundValue::default() {
        parts.push(format!("global +{}", t.global_delta));
    }
    if parts.is_empty() {
        t.rule.id().to_string()
    } else {
        format!("{}({})", t.rule.id(), parts.join(", "))
    }
}

pub fn selmer(args: &SelmerArgs) -> Outcome {
    if args.s == 0 {
        return Err(usage("--s must be at least 1"));
    }
    in_range("--max-level", args.max_level, 2, 10_000)?;
    let assumptions = match args.mode {
        Mode::Refined if !args.exceptional.is_empty() => {
            return Err(usage("--exceptional requires --mode finite-zeros"));
        }
        Mode::Refined => AssumptionSet::refined_non_vanishing(),
        Mode::FiniteZeros => {
            AssumptionSet::finite_zeros(args.exceptional.iter().copied(), args.h2_cap)
                .map_err(|e| usage(e.to_string()))?
        }
    };
    let ledger = SelmerLedger::build(args.r, args.s, assumptions.clone(), args.max_level)
        .map_err(|e| usage(e.to_string()))?;
    let verdict = ledger.verdict().map_err(|e| usage(e.to_string()))?;

    let mut report = Report::new(
        "selmer",
        &[
            "n",
            "local_dim",
            "global_bound_paper",
            "stated_aggregate",
            "global_bound_derived",
            "h2_status",
            "strict_paper",
            "strict_derived",
            "trace",
        ],
    );
    let mode = match assumptions.mode() {
        AssumptionMode::RefinedNonVanishing => "theorem-0-2",
        AssumptionMode::FiniteZeros => "finite-zeros",
    };
    let cap = match assumptions.h2_cap() {
        H2Cap::Bounded(c) => Value::from(c),
        H2Cap::Symbolic => Value::from("symbolic"),
    };
    report
        .meta("r", args.r)
        .meta("s", args.s)
        .meta("max_level", args.max_level);
    report.meta(
        "assumptions",
        json!({
            "mode": mode,
            "exceptional": assumptions.exceptional().iter().collect::<Vec<_>>(),
            "h2_cap": cap,
        }),
    );
    let opt = |b: Option<bool>| b.map_or(Value::from("unknown"), Value::from);
    for row in &ledger.rows {
        let trace: Vec<Value> = row
            .trace
            .iter()
            .map(|t| Value::from(step_text(t)))
            .collect();
        report.push(vec![
            row.n.into(),
            row.local_dim.into(),
            row.global_bound_paper.to_string().into(),
            row.stated_aggregate.to_string().into(),
            row.global_bound_derived.to_string().into(),
            row.h2_status.to_string().into(),
            opt(row.strict_paper),
            opt(row.strict_derived),
            Value::Array(trace),
        ]);
    }

    let mut block = Map::new();
    let threshold = theorem_threshold(args.r, args.s).map_err(|e| usage(e.to_string()))?;
    if assumptions.is_refined() {
        block.insert("paper_threshold".into(), threshold.paper.into());
        block.insert(
            "local_at_threshold".into(),
            local_h1f_total(threshold.paper)
                .map_err(|e| usage(e.to_string()))?
                .into(),
        );
    } else {
        block.insert("paper_threshold".into(), Value::Null);
        block.insert("local_at_threshold".into(), Value::Null);
    }
    block.insert(
        "first_strict_paper".into(),
        verdict.first_strict_paper.map_or(Value::Null, Value::from),
    );
    block.insert(
        "first_strict_derived".into(),
        crossing_value(&verdict.first_strict_derived),
    );
    block.insert(
        "strict_from_derived".into(),
        crossing_value(&verdict.strict_from_derived),
    );
    block.insert("local_growth".into(), verdict.local.to_string().into());
    block.insert("paper_growth".into(), verdict.paper.to_string().into());
    block.insert("derived_growth".into(), verdict.derived.to_string().into());
    block.insert("eventually_strict".into(), verdict.eventually_strict.into());
    let statement = if verdict.eventually_strict {
        "strict for all sufficiently large n"
    } else {
        "no eventual strict inequality"
    };
    block.insert("statement".into(), statement.into());
    let crossing = match &verdict.strict_from_derived {
        Crossing::Exact(n) => format!("n >= {n}"),
        bound => format!("n >= N for some N {bound}"),
    };
    block.insert("crossing".into(), crossing.into());
    report.summary = Some(("verdict", block));

    let mut rules = Map::new();
    for rule in Rule::ALL {
        rules.insert(rule.id().into(), rule.citation().into());
    }
    report.appendix = Some(("rules", rules));
    Ok((report, true))
}

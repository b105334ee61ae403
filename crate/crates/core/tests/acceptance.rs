//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the report reads top to bottom; exits nonzero on any failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Mutex;
use std::time::Instant;

use common::*;
use num_bigint::BigInt;
use qriver::cfrac::{cf_of_surd, surd_terms};
use qriver::concord::{align, check_theorem, theorem_windows};
use qriver::exact::{QuadraticSurd, Rational};
use qriver::forms::BinaryQuadraticForm;
use qriver::lattice::LatticeVector;
use qriver::sail::{dual_check, lls_window};
use qriver::topograph::{
    ap_rule_holds, river, topograph_ball, turn_runs, Direction, EdgeValues, TopographEdge,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEED: u64 = 0x5eed_0fa11;

/// Period of the turn runs of `11x² − 10xy + 2y²`, read off the sign
/// oracle and kept as a regression value.
const PINNED_PERIOD_11_10_2: [u64; 2] = [2, 1];

/// Directed edges whose values are checked against the AP rule.
static TOUCHED: Mutex<Vec<(BinaryQuadraticForm, TopographEdge)>> = Mutex::new(Vec::new());

fn touch(q: &BinaryQuadraticForm, edges: impl IntoIterator<Item = TopographEdge>) {
    let mut t = TOUCHED.lock().unwrap();
    t.extend(edges.into_iter().map(|e| (q.clone(), e)));
}

/// Interior of a run list, dropping the possibly truncated ends.
fn interior(runs: &[u64]) -> &[u64] {
    &runs[1..runs.len() - 1]
}

/// True when `runs` is `period` repeated, starting anywhere in the period.
fn repeats(runs: &[u64], period: &[u64]) -> bool {
    (0..period.len()).any(|s| runs.iter().enumerate().all(|(i, r)| *r == period[(i + s) % period.len()]))
}

fn river_runs_both_ways(q: &BinaryQuadraticForm, window: usize) -> Vec<u64> {
    let (_, turns) = theorem_windows(q, window).unwrap();
    turn_runs(&turns)
}

fn mixed_runs_form() -> Result<String, String> {
    let q = form(1, -2, -5);
    let report = check_theorem(&q, 6).map_err(|e| e.to_string())?;
    if !report.matched {
        return Err(format!("no match: {report:?}"));
    }
    let runs = river_runs_both_ways(&q, 6);
    if !repeats(interior(&runs), &[4, 2]) {
        return Err(format!("interior runs {runs:?}"));
    }
    let turns = river(&q, 24, Direction::Forward).unwrap().turns.to_string();
    if !(turns.contains("LLLLRRLLLLRR") || turns.contains("RRRRLLRRRRLL")) {
        return Err(format!("turns {turns}"));
    }
    Ok(format!("runs {:?}, turns {turns}", interior(&runs)))
}

fn period_two_form() -> Result<String, String> {
    let q = form(11, -10, 2);
    let oracle = oracle_runs(&q, 14);
    if oracle.len() < 6 || !repeats(interior(&oracle), &PINNED_PERIOD_11_10_2) {
        return Err(format!("oracle runs {oracle:?}"));
    }
    let runs = river_runs_both_ways(&q, 8);
    if !repeats(interior(&runs), &PINNED_PERIOD_11_10_2) {
        return Err(format!("river runs {runs:?}"));
    }
    let report = check_theorem(&q, 6).map_err(|e| e.to_string())?;
    if !report.matched {
        return Err(format!("no match: {report:?}"));
    }
    Ok(format!("oracle runs {:?}, period (2, 1)", interior(&oracle)))
}

fn golden() -> Result<String, String> {
    let q = form(1, 1, -1);
    let w = lls_window(&q, 20, 20).map_err(|e| e.to_string())?;
    if w.terms.iter().any(|&t| t != 1) {
        return Err(format!("LLS {:?}", w.terms));
    }
    for dir in [Direction::Forward, Direction::Backward] {
        let path = river(&q, 40, dir).unwrap();
        let t = path.turns.to_string();
        if t.contains("LL") || t.contains("RR") {
            return Err(format!("turns {t}"));
        }
        for e in &path.edges {
            for v in [&e.left, &e.right] {
                if !(is_fibonacci(&v.x.magnitude().clone().into()) && is_fibonacci(&v.y.magnitude().clone().into())) {
                    return Err(format!("region {v} is not a Fibonacci pair"));
                }
            }
        }
        touch(&q, path.edges);
    }
    if !check_theorem(&q, 8).unwrap().matched {
        return Err("no match".into());
    }
    Ok("LLS all ones, turns alternate, regions are Fibonacci pairs".into())
}

fn theorem_suite() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let forms = random_forms(&mut rng, 500, 30);
    let failures: Vec<String> = forms
        .par_iter()
        .filter_map(|q| match check_theorem(q, 8) {
            Ok(r) if r.matched => {
                for dir in [Direction::Forward, Direction::Backward] {
                    touch(q, river(q, 24, dir).unwrap().edges);
                }
                None
            }
            Ok(r) => Some(format!("{q}: {r:?}")),
            Err(e) => Some(format!("{q}: {e}")),
        })
        .collect();
    match failures.first() {
        None => Ok("500/500 forms matched with window 8".into()),
        Some(f) => Err(format!("{} failures, first {f}", failures.len())),
    }
}

fn sail_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let forms = random_forms(&mut rng, 100, 20);
    let results: Vec<Result<usize, String>> = forms.par_iter().map(compare_sail_with_hull).collect();
    let mut certified = 0;
    for r in results {
        certified += r?;
    }
    Ok(format!("100 forms, {certified} certified vertices agree"))
}

fn river_oracle_suite() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let forms = random_forms(&mut rng, 100, 30);
    let depth = 12;
    let ball = topograph_ball(depth);
    let results: Vec<Result<usize, String>> = forms
        .par_iter()
        .map(|q| {
            let oracle = qriver::topograph::river_oracle(q, depth);
            order_path(&oracle).map_err(|e| format!("{q}: {e}"))?;
            let (walked, edges) = walked_in_ball(q, &ball);
            if walked != oracle {
                return Err(format!(
                    "{q}: walked {} edges, oracle {}",
                    walked.len(),
                    oracle.len()
                ));
            }
            touch(q, edges);
            touch(q, oracle.iter().map(|k| k.directed()));
            Ok(oracle.len())
        })
        .collect();
    let mut total = 0;
    let mut empty = 0;
    for r in results {
        let n = r?;
        total += n;
        empty += usize::from(n == 0);
    }
    Ok(format!(
        "100 forms, {total} river edges inside depth {depth}, {empty} rivers outside the ball"
    ))
}

fn ap_rule() -> Result<String, String> {
    let touched = std::mem::take(&mut *TOUCHED.lock().unwrap());
    if touched.is_empty() {
        return Err("no edges recorded".into());
    }
    let distinct: BTreeSet<(String, LatticeVector, LatticeVector)> = touched
        .iter()
        .map(|(q, e)| (q.to_string(), e.left.clone(), e.right.clone()))
        .collect();
    for (q, e) in &touched {
        let values = EdgeValues {
            left: q.evaluate(&e.left),
            right: q.evaluate(&e.right),
            ahead: q.evaluate(&(&e.left + &e.right)),
            behind: q.evaluate(&(&e.left - &e.right)),
        };
        if !ap_rule_holds(&values) {
            return Err(format!("{q} at {e}"));
        }
        let two = Rational::from_integer(2.into());
        if &values.ahead + &values.behind != two * (&values.left + &values.right) {
            return Err(format!("{q} at {e}"));
        }
    }
    Ok(format!("{} edge visits ({} distinct) satisfy the rule", touched.len(), distinct.len()))
}

fn duality() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    for q in random_forms(&mut rng, 100, 30) {
        let r = dual_check(&q, 4).map_err(|e| format!("{q}: {e}"))?;
        if !r.passed || r.checked != 8 {
            return Err(format!("{q}: {r:?}"));
        }
    }
    Ok("100 forms, 8 index pairs each".into())
}

fn group_invariance() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let forms = random_forms(&mut rng, 50, 30);
    let mut reversed = 0;
    for q in forms {
        let m = random_word(&mut rng, 5);
        let image = q.transform(&m);
        let base = river_runs_both_ways(&q, 60);
        let moved = river_runs_both_ways(&image, 6);
        let r = align(interior(&base), &moved, 12).map_err(|e| format!("{q} by {m}: {e}"))?;
        if !r.matched {
            return Err(format!("{q} by {m}: {base:?} vs {moved:?}"));
        }
        reversed += usize::from(r.reversed);
    }
    Ok(format!("50 pairs matched, {reversed} by reversal"))
}

fn cf_correctness() -> Result<String, String> {
    let pinned = [
        (QuadraticSurd::from_i64(0, 1, 2).unwrap(), "[1; (2)]"),
        (QuadraticSurd::from_i64(1, 1, 6).unwrap(), "[3; (2, 4)]"),
        (QuadraticSurd::from_i64(1, 2, 5).unwrap(), "[(1)]"),
    ];
    for (s, text) in &pinned {
        let cf = cf_of_surd(s, 100).map_err(|e| e.to_string())?;
        if cf.to_string() != *text {
            return Err(format!("{s}: {cf}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    let mut checked = 0;
    while checked < 200 {
        let p = rng.gen_range(-500i64..=500);
        let q = rng.gen_range(1i64..=200) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let d = rng.gen_range(2i64..=20_000);
        let Ok(s) = QuadraticSurd::from_i64(p, q, d) else {
            continue;
        };
        let lazy: Vec<BigInt> = surd_terms(&s).take(40).collect();
        let mut digits = 200;
        let oracle = loop {
            let o = decimal_cf_oracle(&s, digits, 40);
            if o.len() == 40 || digits > 1600 {
                break o;
            }
            digits *= 2;
        };
        if oracle != lazy {
            return Err(format!("{s}: oracle {oracle:?} vs {lazy:?}"));
        }
        let periodic = cf_of_surd(&s, 1 << 20).map_err(|e| format!("{s}: {e}"))?;
        let head: Vec<BigInt> = periodic.terms().take(40).cloned().collect();
        if head != oracle {
            return Err(format!("{s}: periodic expansion {periodic} disagrees"));
        }
        checked += 1;
    }
    Ok("3 pinned expansions, 200 random surds agree on 40 terms".into())
}

type Criterion = (&'static str, fn() -> Result<String, String>);

fn main() {
    let criteria: [Criterion; 10] = [
        ("x^2-2xy-5y^2: LLS matches river runs (4,2)", mixed_runs_form),
        ("11x^2-10xy+2y^2: periodic runs, pinned period, match", period_two_form),
        ("x^2+xy-y^2: all-ones LLS, alternating turns", golden),
        ("theorem on 500 random forms", theorem_suite),
        ("sail equals brute-force hull on 100 forms", sail_oracle),
        ("river equals sign oracle on 100 forms, depth 12", river_oracle_suite),
        ("AP rule on every touched edge", ap_rule),
        ("edge-angle duality on 100 forms", duality),
        ("turn runs invariant under 50 unimodular words", group_invariance),
        ("continued fractions against decimal oracle", cf_correctness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}

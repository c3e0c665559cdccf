//! Acceptance suite: prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All comparisons are exact; the only
//! tolerances are the wall-clock budgets below.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use vecdual::duality::{check_feasible_l, dual_b_nonempty, membership_hb, membership_hj, membership_hl, primal_empty};
use vecdual::efficiency::{enumerate_basic_feasible, enumerate_vertices};
use vecdual::exact::{frac, int};
use vecdual::harness::{
    fixture, run_all_fixtures, run_random_campaign, verify_problem, CampaignConfig, Status, VerificationReport, CHECKS,
};
use vecdual::lp::verify::check_outcome;
use vecdual::lp::{solve_lp, LinearProgram, LpOutcome};
use vecdual::model::DualCandidateL;
use vecdual::random::{small_matrix, small_vector};
use vecdual::{OrderingCone, QMatrix, QVector, Rational, VlpProblem};

const CAMPAIGN_SEED: u64 = 42;
const CAMPAIGN_COUNT: usize = 100;
const WORKED_EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
const CAMPAIGN_BUDGET: Duration = Duration::from_secs(60);
const LP_COUNT: usize = 500;
const LP_SEED: u64 = 8;

struct Line {
    id: u32,
    name: &'static str,
    ok: bool,
    detail: String,
}

fn v(x: &[i64]) -> QVector {
    QVector::from_ints(x)
}

fn check_summary(report: &VerificationReport, check: &str) -> (usize, usize, u64) {
    let records: Vec<_> = report.records().iter().filter(|r| r.check == check).collect();
    let fails = records.iter().filter(|r| r.status == Status::Fail).count();
    let passes = records.iter().filter(|r| r.status == Status::Pass).count();
    let executed = records.iter().map(|r| r.executed()).sum();
    (passes, fails, executed)
}

fn check_line(id: u32, name: &'static str, report: &VerificationReport, checks: &[&str], min_cases: u64) -> Line {
    let mut ok = true;
    let mut parts = Vec::new();
    for check in checks {
        let (_, fails, executed) = check_summary(report, check);
        ok &= fails == 0 && executed >= min_cases;
        parts.push(format!("{check}: {executed} cases, {fails} failures"));
    }
    Line {
        id,
        name,
        ok,
        detail: parts.join("; "),
    }
}

fn worked_example() -> Line {
    let start = Instant::now();
    let p = fixture("FIX-GAP").unwrap().problem;
    let cand = DualCandidateL {
        lambda: v(&[1, 1]),
        z: v(&[0, 0]),
        v: v(&[-1, -1]),
    };
    let d = v(&[-1, -1]);
    let results = [
        ("lagrange point feasible", check_feasible_l(&p, &cand).unwrap()),
        ("(-1,-1) in hL", membership_hl(&p, &d).unwrap().member),
        ("(-1,-1) not in h(B)", !membership_hb(&p, &d).unwrap().member),
        ("no vertices", enumerate_vertices(&p).unwrap().is_empty()),
        ("B nonempty", dual_b_nonempty(&p).unwrap()),
    ];
    let elapsed = start.elapsed();
    let failed: Vec<_> = results.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    Line {
        id: 1,
        name: "worked example with empty primal",
        ok: failed.is_empty() && elapsed < WORKED_EXAMPLE_BUDGET,
        detail: format!(
            "{} of {} facts hold, {:?} (budget {:?}){}",
            results.len() - failed.len(),
            results.len(),
            elapsed,
            WORKED_EXAMPLE_BUDGET,
            if failed.is_empty() {
                String::new()
            } else {
                format!(", failed: {failed:?}")
            }
        ),
    }
}

fn random_lp(rng: &mut ChaCha8Rng) -> LinearProgram {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(1..=3);
    let a = small_matrix(rng, m, n);
    let b = if rng.gen_bool(0.6) {
        let x0: QVector = (0..n)
            .map(|_| frac(rng.gen_range(0..=6), rng.gen_range(1..=3)))
            .collect();
        a.mul_vec(&x0).unwrap()
    } else {
        small_vector(rng, m)
    };
    LinearProgram::new(small_vector(rng, n), a, b).unwrap()
}

fn rat_rows(rows: &[&[(i64, i64)]]) -> QMatrix {
    let cols = rows[0].len();
    QMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&(p, q)| frac(p, q)).collect())
            .collect(),
        cols,
    )
    .unwrap()
}

fn r(p: i64) -> (i64, i64) {
    (p, 1)
}

/// Classic instances on which textbook pivoting rules cycle, plus heavily
/// degenerate and redundant systems. Each carries its pinned optimum, if any.
fn cycling_prone() -> Vec<(&'static str, LinearProgram, Option<Rational>)> {
    let beale = LinearProgram::new(
        QVector::new(vec![int(0), int(0), int(0), frac(-3, 4), int(20), frac(-1, 2), int(6)]),
        rat_rows(&[
            &[r(1), r(0), r(0), (1, 4), r(-8), r(-1), r(9)],
            &[r(0), r(1), r(0), (1, 2), r(-12), (-1, 2), r(3)],
            &[r(0), r(0), r(1), r(0), r(0), r(1), r(0)],
        ]),
        v(&[0, 0, 1]),
    )
    .unwrap();
    let kuhn = LinearProgram::new(
        v(&[-2, -3, 1, 12, 0, 0, 0]),
        rat_rows(&[
            &[r(-2), r(-9), r(1), r(9), r(1), r(0), r(0)],
            &[(1, 3), r(1), (-1, 3), r(-2), r(0), r(1), r(0)],
            &[r(2), r(3), r(-1), r(-12), r(0), r(0), r(1)],
        ]),
        v(&[0, 0, 2]),
    )
    .unwrap();
    let degenerate_vertex = LinearProgram::new(
        v(&[-1, -1, 0, 0, 0]),
        QMatrix::from_int_rows(&[&[1, 1, 1, 0, 0], &[1, -1, 0, 1, 0], &[-1, 1, 0, 0, 1]]),
        v(&[0, 0, 0]),
    )
    .unwrap();
    let redundant = LinearProgram::new(
        v(&[1, 2, 3]),
        QMatrix::from_int_rows(&[&[1, 1, 1], &[2, 2, 2], &[1, 1, 1]]),
        v(&[1, 2, 1]),
    )
    .unwrap();
    vec![
        ("beale", beale, Some(frac(-5, 4))),
        ("kuhn", kuhn, None),
        ("degenerate-vertex", degenerate_vertex, Some(int(0))),
        ("redundant-rows", redundant, Some(int(1))),
    ]
}

/// Cross-checks one outcome against its certificate and against the vertex
/// list. `None` means the outcome is consistent.
fn lp_mismatch(lp: &LinearProgram, outcome: &LpOutcome) -> Option<String> {
    if let Err(e) = check_outcome(lp, outcome) {
        return Some(format!("certificate rejected: {e}"));
    }
    let vertices = enumerate_basic_feasible(lp.eq_matrix(), lp.eq_rhs(), u128::MAX).unwrap();
    match outcome {
        LpOutcome::Optimal { x, y, value } => {
            if &lp.objective().dot(x) != value || &lp.eq_rhs().dot(y) != value {
                return Some(format!("objective {value} differs from c^T x or b^T y"));
            }
            let best = vertices.iter().map(|v| lp.objective().dot(v)).min();
            (best.as_ref() != Some(value)).then(|| format!("optimum {value}, best vertex {best:?}"))
        }
        LpOutcome::Infeasible { .. } => (!vertices.is_empty()).then(|| "infeasible but vertices exist".into()),
        LpOutcome::Unbounded { .. } => vertices.is_empty().then(|| "unbounded but no vertices".into()),
    }
}

fn lp_engine() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(LP_SEED);
    let mut kinds = [0usize; 3];
    let mut problems = Vec::new();
    for i in 0..LP_COUNT {
        let lp = random_lp(&mut rng);
        let outcome = solve_lp(&lp);
        kinds[match outcome {
            LpOutcome::Optimal { .. } => 0,
            LpOutcome::Infeasible { .. } => 1,
            LpOutcome::Unbounded { .. } => 2,
        }] += 1;
        if let Some(why) = lp_mismatch(&lp, &outcome) {
            problems.push(format!("random #{i}: {why}"));
        }
    }
    let curated = cycling_prone();
    for (name, lp, pinned) in &curated {
        let outcome = solve_lp(lp);
        if let Some(why) = lp_mismatch(lp, &outcome) {
            problems.push(format!("{name}: {why}"));
        }
        if let Some(expected) = pinned {
            if outcome.optimal_value() != Some(expected) {
                problems.push(format!("{name}: expected optimum {expected}, got {outcome:?}"));
            }
        }
    }
    Line {
        id: 8,
        name: "LP engine",
        ok: problems.is_empty() && kinds.iter().all(|&c| c > 0),
        detail: format!(
            "{LP_COUNT} random LPs ({} optimal, {} infeasible, {} unbounded), {} cycling-prone LPs, {} mismatches{}",
            kinds[0],
            kinds[1],
            kinds[2],
            curated.len(),
            problems.len(),
            problems.first().map(|p| format!(", first: {p}")).unwrap_or_default()
        ),
    }
}

fn quadrant_of(w: &Value) -> Option<(bool, bool)> {
    let q = w.get("quadrant")?;
    Some((q.get("primal_empty")?.as_bool()?, q.get("dual_empty")?.as_bool()?))
}

/// `0 x = 1` has no solution, and `L^T λ = -λ_1 - λ_2 < 0` for every
/// `λ > 0`, so the dual set is empty too. Random instances rarely land here.
fn both_empty_instance() -> VlpProblem {
    VlpProblem::new(
        QMatrix::from_int_rows(&[&[-1], &[-1]]),
        QMatrix::from_int_rows(&[&[0]]),
        v(&[1]),
        OrderingCone::orthant(2),
    )
    .unwrap()
}

fn emptiness(report: &VerificationReport) -> Line {
    let mut quadrants: BTreeSet<(bool, bool)> = report
        .records()
        .iter()
        .filter(|r| r.check == "emptiness-logic" && r.status == Status::Pass)
        .filter_map(|r| r.witness.as_ref().and_then(quadrant_of))
        .collect();
    for name in ["FIX-GAP", "FIX-ZB", "FIX-SEG"] {
        let p = fixture(name).unwrap().problem;
        quadrants.insert((primal_empty(&p).unwrap(), !dual_b_nonempty(&p).unwrap()));
    }
    let both_empty = both_empty_instance();
    let extra = verify_problem("both-empty", &both_empty, 0, &CampaignConfig::default());
    let (_, extra_fails, _) = check_summary(&extra, "emptiness-logic");
    quadrants.insert((
        primal_empty(&both_empty).unwrap(),
        !dual_b_nonempty(&both_empty).unwrap(),
    ));
    let (_, logic_fails, logic_cases) = check_summary(report, "emptiness-logic");
    let logic_fails = logic_fails + extra_fails;
    let (_, step_fails, step_cases) = check_summary(report, "improvement-step");
    let label = |&(a, b): &(bool, bool)| {
        format!(
            "A {} / B {}",
            if a { "empty" } else { "nonempty" },
            if b { "empty" } else { "nonempty" }
        )
    };
    Line {
        id: 9,
        name: "emptiness logic and improvement step",
        ok: logic_fails == 0 && step_fails == 0 && step_cases > 0 && quadrants.len() == 4,
        detail: format!(
            "quadrants seen: [{}]; emptiness-logic {logic_cases} cases, {logic_fails} failures; improvement-step {step_cases} cases, {step_fails} failures",
            quadrants.iter().map(label).collect::<Vec<_>>().join(", ")
        ),
    }
}

fn inclusion(report: &VerificationReport) -> Line {
    let mut line = check_line(7, "inclusion chain", report, &["inclusion-chain", "h-value-map"], 1);
    let zb = fixture("FIX-ZB").unwrap().problem;
    let d = v(&[1, -1]);
    let strict_j = !membership_hj(&zb, &d).unwrap().member && membership_hb(&zb, &d).unwrap().member;
    let gap = fixture("FIX-GAP").unwrap().problem;
    let e = v(&[-1, -1]);
    let strict_l = membership_hl(&gap, &e).unwrap().member && !membership_hb(&gap, &e).unwrap().member;
    line.ok &= strict_j && strict_l;
    line.detail.push_str(&format!(
        "; hJ strictly inside h(B) on b = 0: {strict_j}; h(B) strictly inside hL: {strict_l}"
    ));
    line
}

fn main() {
    let mut lines = vec![worked_example()];

    let start = Instant::now();
    let report = run_random_campaign(CAMPAIGN_SEED, CAMPAIGN_COUNT).expect("campaign runs");
    let campaign_time = start.elapsed();
    let fixtures = run_all_fixtures().expect("fixtures run");

    let mut scalar = check_line(
        2,
        "efficiency iff scalarization certificate",
        &report,
        &["scalarization-equivalence"],
        1,
    );
    scalar.ok &= campaign_time < CAMPAIGN_BUDGET;
    scalar.detail.push_str(&format!(
        "; {CAMPAIGN_COUNT} instances, full campaign {campaign_time:?} (budget {CAMPAIGN_BUDGET:?})"
    ));
    lines.push(scalar);
    lines.push(check_line(3, "weak duality", &report, &["weak-duality"], 1));
    lines.push(check_line(
        4,
        "strong duality with zero complementarity gap",
        &report,
        &["strong-duality"],
        1,
    ));
    lines.push(check_line(
        5,
        "converse duality and Lagrange map",
        &report,
        &["converse-duality"],
        1,
    ));
    lines.push(check_line(
        6,
        "no-domination feasibility agrees with multiplier",
        &report,
        &["no-domination-equivalence"],
        200,
    ));
    lines.push(inclusion(&report));
    lines.push(lp_engine());
    lines.push(emptiness(&report));

    for l in &lines {
        println!(
            "criterion {}: {} - {} ({})",
            l.id,
            if l.ok { "PASS" } else { "FAIL" },
            l.name,
            l.detail
        );
    }
    let counts = report.execution_counts();
    let vacuous: Vec<_> = CHECKS
        .iter()
        .filter(|c| counts.get(**c).copied().unwrap_or(0) == 0)
        .collect();
    println!(
        "campaign: {} pass, {} fail, {} skipped; fixtures: {} records, {} failures; checks with no cases: {vacuous:?}",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Skipped),
        fixtures.records().len(),
        fixtures.count(Status::Fail)
    );

    let failed: Vec<_> = lines.iter().filter(|l| !l.ok).map(|l| l.id).collect();
    if !failed.is_empty() || !fixtures.is_success() || !vacuous.is_empty() {
        eprintln!(
            "acceptance failed: criteria {failed:?}, fixture failures {}",
            fixtures.count(Status::Fail)
        );
        std::process::exit(1);
    }
    println!("acceptance: all {} criteria pass", lines.len());
}

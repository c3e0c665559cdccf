//! Verification campaigns over fixtures and seeded random corpora.
//!
//! Every check runs on one problem instance and yields a [`CheckRecord`].
//! Passing records carry the number of cases the check executed; failing
//! records carry the problem and the offending data so the failure can be
//! replayed.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cone::OrderingCone;
use crate::duality::{
    check_feasible_d, check_feasible_j, check_feasible_l, check_feasible_u, complementarity_gap,
    construct_dual_solution, dual_b_nonempty, h_value_membership, improve_dual_point, map_d_to_dl, map_dh_to_d,
    membership, membership_hb, membership_hj, membership_hl, no_domination_multiplier, primal_empty, recover_primal,
    supported_columns, DualWitness, ImageSet,
};
use crate::efficiency::{
    check_certificate, efficient_vertices, enumerate_vertices, is_efficient, proper_efficiency_certificate,
    recession_image_pointed, DominationVerdict, EfficiencyCertificate,
};
use crate::error::{Error, Result};
use crate::exact::{int, QMatrix, QVector};
use crate::model::{
    objective_d, objective_j, primal_feasible, DualCandidateD, DualCandidateL, DualCandidateU, UFlavor, VlpProblem,
};
use crate::random::{convex_combination, random_instance, sample_dual_points, small_matrix, small_vector};

/// Checks run on every instance, in execution order.
pub const CHECKS: &[&str] = &[
    "scalarization-equivalence",
    "weak-duality",
    "strong-duality",
    "converse-duality",
    "no-domination-equivalence",
    "inclusion-chain",
    "h-value-map",
    "emptiness-logic",
    "improvement-step",
    "minimal-values-in-dual-image",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub instance: String,
    pub status: Status,
    pub witness: Option<Value>,
    pub elapsed_ms: f64,
}

impl CheckRecord {
    /// Cases executed, as recorded in the witness payload.
    pub fn executed(&self) -> u64 {
        self.witness
            .as_ref()
            .and_then(|w| w.get("executed"))
            .and_then(Value::as_u64)
            .unwrap_or(0)
    }
}

/// Records sorted by instance id, then check name.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| (&a.instance, &a.check).cmp(&(&b.instance, &b.check)));
        VerificationReport { records }
    }

    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    pub fn merge(self, other: VerificationReport) -> Self {
        let mut records = self.records;
        records.extend(other.records);
        VerificationReport::new(records)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn is_success(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    /// Total executed cases per check name.
    pub fn execution_counts(&self) -> BTreeMap<String, u64> {
        let mut counts = BTreeMap::new();
        for r in &self.records {
            *counts.entry(r.check.clone()).or_insert(0) += r.executed();
        }
        counts
    }

    /// Zeroes every elapsed time so reports from separate runs compare equal.
    pub fn strip_timings(mut self) -> Self {
        for r in &mut self.records {
            r.elapsed_ms = 0.0;
        }
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Human,
    Json,
}

pub fn emit_report(r: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(r.records()).expect("records serialize"),
        ReportFormat::Human => {
            let mut out = String::new();
            for rec in r.records() {
                let status = match rec.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                let note = match rec.status {
                    Status::Pass => format!("executed={}", rec.executed()),
                    _ => rec
                        .witness
                        .as_ref()
                        .and_then(|w| w.get("detail").or_else(|| w.get("reason")))
                        .and_then(Value::as_str)
                        .unwrap_or("")
                        .to_string(),
                };
                out.push_str(&format!("{status} {:<30} {:<16} {note}\n", rec.check, rec.instance));
            }
            out
        }
    }
}

pub fn parse_report(text: &str) -> Result<VerificationReport> {
    let records: Vec<CheckRecord> = serde_json::from_str(text).map_err(|e| Error::parse("report", e.to_string()))?;
    Ok(VerificationReport::new(records))
}

/// Sampling sizes for the relational checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    pub dual_points: usize,
    pub primal_points: usize,
    pub sampled_values: usize,
    pub u_matrices: usize,
    pub h_value_duals: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            dual_points: 50,
            primal_points: 50,
            sampled_values: 50,
            u_matrices: 2,
            h_value_duals: 5,
        }
    }
}

enum Outcome {
    Pass { executed: usize, info: Value },
    Fail { detail: String, data: Value },
    Skipped(String),
}

fn pass(executed: usize) -> Result<Outcome> {
    Ok(Outcome::Pass {
        executed,
        info: Value::Null,
    })
}

fn fail(detail: impl Into<String>, data: Value) -> Result<Outcome> {
    Ok(Outcome::Fail {
        detail: detail.into(),
        data,
    })
}

/// Data shared by all checks on one instance.
struct Context<'a> {
    p: &'a VlpProblem,
    seed: u64,
    config: &'a CampaignConfig,
    vertices: Vec<QVector>,
    efficient: Vec<(QVector, EfficiencyCertificate)>,
    duals: Vec<DualCandidateD>,
    primal_points: Vec<QVector>,
    primal_empty: bool,
    dual_nonempty: bool,
}

impl<'a> Context<'a> {
    fn build(p: &'a VlpProblem, seed: u64, config: &'a CampaignConfig) -> Result<Self> {
        let mut rng = check_rng(seed, 0);
        let vertices = enumerate_vertices(p)?;
        let efficient = efficient_vertices(p)?;
        let duals = sample_dual_points(p, &mut rng, config.dual_points)?;
        for c in &duals {
            if !check_feasible_d(p, c)? {
                return Err(Error::Invariant(format!("sampled dual point is infeasible: {c:?}")));
            }
        }
        let mut primal_points = vertices.clone();
        primal_points.truncate(config.primal_points);
        while !vertices.is_empty() && primal_points.len() < config.primal_points {
            primal_points.push(convex_combination(&mut rng, &vertices));
        }
        Ok(Context {
            p,
            seed,
            config,
            primal_empty: primal_empty(p)?,
            dual_nonempty: dual_b_nonempty(p)?,
            vertices,
            efficient,
            duals,
            primal_points,
        })
    }

    fn rng(&self, check: usize) -> ChaCha8Rng {
        check_rng(self.seed, check as u64 + 1)
    }
}

fn check_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `lx` strictly below `h` under `K`. A `λ ∈ K^{*0}` with `λ^T (h - lx) <= 0`
/// certifies the answer is no without solving the membership LP.
fn strictly_below_given(p: &VlpProblem, lambda: &QVector, lx: &QVector, h: &QVector) -> Result<bool> {
    let w = h - lx;
    if w.is_zero() || lambda.dot(&w) <= Zero::zero() {
        return Ok(false);
    }
    p.cone().strictly_below(lx, h)
}

fn scalarization_equivalence(cx: &Context) -> Result<Outcome> {
    let p = cx.p;
    for x in &cx.vertices {
        let verdict = is_efficient(p, x)?;
        let cert = proper_efficiency_certificate(p, x)?;
        if verdict.is_efficient() != cert.is_some() {
            return fail(
                "efficiency and scalarization disagree",
                json!({"x": x, "efficient": verdict.is_efficient(), "certificate": cert}),
            );
        }
        if let Some(cert) = &cert {
            if let Err(e) = check_certificate(p, x, cert) {
                return fail(
                    format!("certificate rejected: {e}"),
                    json!({"x": x, "certificate": cert}),
                );
            }
        }
        if let DominationVerdict::Dominated { dominator, via_ray } = verdict {
            let ok = primal_feasible(p, &dominator)? && p.cone().strictly_below(&p.image(&dominator)?, &p.image(x)?)?;
            if !ok {
                return fail(
                    "dominator does not dominate",
                    json!({"x": x, "dominator": dominator, "via_ray": via_ray}),
                );
            }
        }
    }
    pass(cx.vertices.len())
}

fn weak_duality(cx: &Context) -> Result<Outcome> {
    let p = cx.p;
    let images = cx
        .primal_points
        .iter()
        .map(|x| p.image(x))
        .collect::<Result<Vec<_>>>()?;
    let mut executed = 0;
    for c in &cx.duals {
        let h = objective_d(c, p)?;
        for (x, lx) in cx.primal_points.iter().zip(&images) {
            executed += 1;
            if strictly_below_given(p, &c.lambda, lx, &h)? {
                return fail(
                    "dual value strictly dominates a primal value",
                    json!({"x": x, "dual": c, "image": lx, "dual_value": h}),
                );
            }
        }
    }
    Ok(Outcome::Pass {
        executed,
        info: json!({"dual_points": cx.duals.len(), "primal_points": cx.primal_points.len()}),
    })
}

fn strong_duality(cx: &Context) -> Result<Outcome> {
    let p = cx.p;
    for (x, cert) in &cx.efficient {
        let c = construct_dual_solution(p, x, cert)?;
        let lx = p.image(x)?;
        let h = objective_d(&c, p)?;
        let gap = complementarity_gap(p, x, &c)?;
        if !check_feasible_d(p, &c)? || h != lx || !gap.is_zero() {
            return fail(
                "constructed dual point is infeasible, off-value or not complementary",
                json!({"x": x, "certificate": cert, "dual": c, "dual_value": h, "gap": gap.to_string()}),
            );
        }
        for other in &cx.duals {
            let h2 = objective_d(other, p)?;
            if strictly_below_given(p, &other.lambda, &lx, &h2)? {
                return fail(
                    "sampled dual point dominates an efficient value",
                    json!({"x": x, "dual": other, "dual_value": h2}),
                );
            }
        }
    }
    pass(cx.efficient.len())
}

fn recovers_efficiently(p: &VlpProblem, d: &QVector) -> Result<Option<QVector>> {
    let Some(x) = recover_primal(p, d)? else {
        return Ok(None);
    };
    if p.image(&x)? != *d || !is_efficient(p, &x)?.is_efficient() {
        return Ok(None);
    }
    Ok(Some(x))
}

fn converse_duality(cx: &Context) -> Result<Outcome> {
    let p = cx.p;
    let mut executed = 0;
    for (x, cert) in &cx.efficient {
        let c = construct_dual_solution(p, x, cert)?;
        let h = objective_d(&c, p)?;
        if recovers_efficiently(p, &h)?.is_none() {
            return fail(
                "no efficient preimage of a dual value",
                json!({"dual": c, "dual_value": h}),
            );
        }
        let l = map_d_to_dl(p, &c)?;
        if !check_feasible_l(p, &l)? || l.v != h || recovers_efficiently(p, &l.v)?.is_none() {
            return fail(
                "Lagrange image lost feasibility or value",
                json!({"dual": c, "lagrange": l}),
            );
        }
        executed += 1;
    }
    for c in &cx.duals {
        let l = map_d_to_dl(p, c)?;
        if !check_feasible_l(p, &l)? || l.v != objective_d(c, p)? {
            return fail(
                "Lagrange image lost feasibility or value",
                json!({"dual": c, "lagrange": l}),
            );
        }
        executed += 1;
    }
    pass(executed)
}

fn no_domination_equivalence(cx: &Context) -> Result<Outcome> {
    let p = cx.p;
    let mut rng = cx.rng(4);
    let mut agree_feasible = 0;
    for t in 0..cx.config.u_matrices {
        let u = match cx.duals.get(t) {
            Some(c) if t % 2 == 1 => c.u.clone(),
            _ => small_matrix(&mut rng, p.k(), p.m()),
        };
        let feasible = check_feasible_u(
            p,
            &DualCandidateU {
                u: u.clone(),
                flavor: UFlavor::Cone,
            },
        )?;
        let lambda = no_domination_multiplier(p, &u)?;
        if let Some(l) = &lambda {
            let reduced = p.reduced_objective(&u)?.tr_mul_vec(l)?;
            if !p.cone().in_quasi_interior(l)? || !reduced.is_nonnegative() {
                return fail("multiplier fails its own system", json!({"U": u, "lambda": l}));
            }
        }
        if feasible != lambda.is_some() {
            return fail(
                "no-domination test and multiplier search disagree",
                json!({"U": u, "feasible": feasible, "lambda": lambda}),
            );
        }
        agree_feasible += usize::from(feasible);
    }
    Ok(Outcome::Pass {
        executed: cx.config.u_matrices,
        info: json!({"feasible": agree_feasible}),
    })
}

fn sampled_values(cx: &Context, rng: &mut ChaCha8Rng) -> Result<Vec<QVector>> {
    let p = cx.p;
    let total = cx.config.sampled_values;
    let mut values = vec![QVector::zeros(p.k())];
    let gens = p.cone().generators();
    for c in cx.duals.iter().take(total / 4) {
        let h = objective_d(c, p)?;
        let g = &gens[rng.gen_range(0..gens.len())];
        values.push(&h - &g.scale(&int(rng.gen_range(1..=3))));
        values.push(objective_j(&c.project_j(), p)?);
        values.push(h);
    }
    for (x, _) in &cx.efficient {
        values.push(p.image(x)?);
    }
    values.truncate(total);
    while values.len() < total {
        values.push(small_vector(rng, p.k()));
    }
    Ok(values)
}

fn witness_reproduces(p: &VlpProblem, d: &QVector, w: &DualWitness) -> Result<bool> {
    Ok(match w {
        DualWitness::D(c) => check_feasible_d(p, c)? && objective_d(c, p)? == *d,
        DualWitness::J(c) => check_feasible_j(p, c)? && objective_j(c, p)? == *d,
        DualWitness::L(c) => check_feasible_l(p, c)? && c.v == *d,
    })
}

fn inclusion_chain(cx: &Context) -> Result<Outcome> {
    let p = cx.p;
    let mut rng = cx.rng(5);
    let values = sampled_values(cx, &mut rng)?;
    let mut members = [0usize; 3];
    let mut gaps = (0usize, 0usize);
    for d in &values {
        let verdicts = [membership_hj(p, d)?, membership_hb(p, d)?, membership_hl(p, d)?];
        for (slot, v) in verdicts.iter().enumerate() {
            if v.member {
                members[slot] += 1;
                let ok = match &v.candidate {
                    Some(w) => witness_reproduces(p, d, w)?,
                    None => false,
                };
                if !ok {
                    return fail(
                        "membership witness does not reproduce the value",
                        json!({"value": d, "verdict": v}),
                    );
                }
            }
        }
        let [j, b, l] = verdicts.map(|v| v.member);
        if (j && !b) || (b && !l) {
            return fail(
                "image inclusion violated",
                json!({"value": d, "hJ": j, "hB": b, "hL": l}),
            );
        }
        gaps.0 += usize::from(b && !j);
        gaps.1 += usize::from(l && !b);
    }
    Ok(Outcome::Pass {
        executed: values.len(),
        info: json!({
            "members": {"hJ": members[0], "hB": members[1], "hL": members[2]},
            "strict_gaps": {"hB_not_hJ": gaps.0, "hL_not_hB": gaps.1},
        }),
    })
}

fn h_value_map(cx: &Context) -> Result<Outcome> {
    let p = cx.p;
    let mut rng = cx.rng(6);
    let mut executed = 0;
    for c in cx.duals.iter().take(cx.config.h_value_duals) {
        let u = &c.u;
        let feasible = check_feasible_u(
            p,
            &DualCandidateU {
                u: u.clone(),
                flavor: UFlavor::Cone,
            },
        )?;
        let Some(gamma) = no_domination_multiplier(p, u)? else {
            return fail("dual point's U has no multiplier", json!({"dual": c}));
        };
        if !feasible {
            return fail(
                "dual point's U is not feasible for the no-domination test",
                json!({"dual": c}),
            );
        }
        let support = supported_columns(p, u, &gamma)?;
        let x: QVector = (0..p.n())
            .map(|j| {
                if support.contains(&j) {
                    int(rng.gen_range(0..=3))
                } else {
                    int(0)
                }
            })
            .collect();
        let d = &u.mul_vec(p.b())? + &p.reduced_objective(u)?.mul_vec(&x)?;
        if !h_value_membership(p, u, &d)? {
            return fail(
                "supported value is not a member of the U image",
                json!({"U": u, "x": x, "value": d}),
            );
        }
        let mapped = map_dh_to_d(p, u, &x)?;
        if !check_feasible_d(p, &mapped)? || objective_d(&mapped, p)? != d || !membership_hb(p, &d)?.member {
            return fail("mapped point leaves h(B)", json!({"U": u, "x": x, "mapped": mapped}));
        }
        executed += 1;
    }
    pass(executed)
}

fn emptiness_logic(cx: &Context) -> Result<Outcome> {
    let p = cx.p;
    let quadrant = json!({"primal_empty": cx.primal_empty, "dual_empty": !cx.dual_nonempty});
    if !cx.primal_empty {
        let pointed = recession_image_pointed(p)?;
        let has_efficient = !cx.efficient.is_empty();
        if has_efficient != pointed || pointed != cx.dual_nonempty {
            return fail(
                "emptiness biconditional violated",
                json!({"efficient_vertices": has_efficient, "recession_pointed": pointed, "dual_nonempty": cx.dual_nonempty}),
            );
        }
    } else if !cx.vertices.is_empty() {
        return fail("vertices of an empty feasible set", json!({"vertices": cx.vertices}));
    }
    Ok(Outcome::Pass {
        executed: 1,
        info: json!({"quadrant": quadrant}),
    })
}

fn improvement_step(cx: &Context) -> Result<Outcome> {
    let p = cx.p;
    if !(cx.primal_empty && cx.dual_nonempty) {
        return Ok(Outcome::Skipped(
            "applies only when the primal is infeasible and B is nonempty".into(),
        ));
    }
    for c in &cx.duals {
        let better = improve_dual_point(p, c)?;
        let (h0, h1) = (objective_d(c, p)?, objective_d(&better, p)?);
        if !check_feasible_d(p, &better)? || !p.cone().strictly_below(&h0, &h1)? {
            return fail(
                "improvement step did not improve",
                json!({"dual": c, "improved": better}),
            );
        }
    }
    pass(cx.duals.len())
}

fn minimal_values_in_dual_image(cx: &Context) -> Result<Outcome> {
    let p = cx.p;
    let images = cx.vertices.iter().map(|x| p.image(x)).collect::<Result<Vec<_>>>()?;
    let mut minimal: Vec<QVector> = Vec::new();
    for m in p.cone().min_elements(&images)? {
        if !minimal.contains(&m) {
            minimal.push(m);
        }
    }
    let mut efficient_images = Vec::new();
    for (x, _) in &cx.efficient {
        let lx = p.image(x)?;
        if !efficient_images.contains(&lx) {
            efficient_images.push(lx);
        }
    }
    for lx in &efficient_images {
        if !minimal.contains(lx) {
            return fail(
                "efficient image is not minimal among vertex images",
                json!({"value": lx}),
            );
        }
        if !membership_hb(p, lx)?.member {
            return fail("minimal value missing from h(B)", json!({"value": lx}));
        }
        for c in &cx.duals {
            let h = objective_d(c, p)?;
            if strictly_below_given(p, &c.lambda, lx, &h)? {
                return fail(
                    "sampled dual value dominates a minimal value",
                    json!({"value": lx, "dual": c}),
                );
            }
        }
    }
    Ok(Outcome::Pass {
        executed: efficient_images.len(),
        info: json!({"minimal_vertex_images": minimal.len()}),
    })
}

type CheckFn = fn(&Context) -> Result<Outcome>;

const CHECK_FNS: &[CheckFn] = &[
    scalarization_equivalence,
    weak_duality,
    strong_duality,
    converse_duality,
    no_domination_equivalence,
    inclusion_chain,
    h_value_map,
    emptiness_logic,
    improvement_step,
    minimal_values_in_dual_image,
];

fn problem_value(p: &VlpProblem) -> Value {
    serde_json::from_str(&p.to_json()).expect("problem JSON parses")
}

fn to_record(
    check: &str,
    instance: &str,
    p: &VlpProblem,
    seed: u64,
    outcome: Result<Outcome>,
    elapsed_ms: f64,
) -> CheckRecord {
    let (status, witness) = match outcome {
        Ok(Outcome::Pass { executed, info }) => {
            let mut w = json!({"executed": executed});
            if let Value::Object(extra) = info {
                w.as_object_mut().expect("object").extend(extra);
            }
            (Status::Pass, w)
        }
        Ok(Outcome::Fail { detail, data }) => (
            Status::Fail,
            json!({"executed": 1, "detail": detail, "seed": seed, "problem": problem_value(p), "data": data}),
        ),
        Err(e) => (
            Status::Fail,
            json!({"executed": 1, "detail": e.to_string(), "seed": seed, "problem": problem_value(p)}),
        ),
        Ok(Outcome::Skipped(reason)) => (Status::Skipped, json!({"executed": 0, "reason": reason})),
    };
    CheckRecord {
        check: check.to_string(),
        instance: instance.to_string(),
        status,
        witness: Some(witness),
        elapsed_ms,
    }
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Runs every registered check on `p`. Sampling is driven by `seed`.
pub fn verify_problem(instance: &str, p: &VlpProblem, seed: u64, config: &CampaignConfig) -> VerificationReport {
    let start = Instant::now();
    let records = match Context::build(p, seed, config) {
        Ok(cx) => CHECKS
            .iter()
            .zip(CHECK_FNS)
            .map(|(name, f)| {
                let t = Instant::now();
                let outcome = f(&cx);
                to_record(name, instance, p, seed, outcome, millis(t))
            })
            .collect(),
        Err(e) => {
            let ms = millis(start);
            CHECKS
                .iter()
                .map(|name| to_record(name, instance, p, seed, Err(e.clone()), ms))
                .collect()
        }
    };
    VerificationReport::new(records)
}

/// Instance `index` of the campaign seeded by `seed`, with the seed used to
/// sample its checks.
pub fn campaign_instance(seed: u64, index: u64) -> (VlpProblem, u64) {
    let mut rng = check_rng(seed, index);
    let p = random_instance(&mut rng);
    (p, rng.gen())
}

pub fn run_random_campaign(seed: u64, count: usize) -> Result<VerificationReport> {
    run_campaign_with(seed, count, &CampaignConfig::default())
}

pub fn run_campaign_with(seed: u64, count: usize, config: &CampaignConfig) -> Result<VerificationReport> {
    if count == 0 {
        return Err(Error::Precondition("campaign count must be at least 1".into()));
    }
    let records: Vec<CheckRecord> = (0..count as u64)
        .into_par_iter()
        .flat_map_iter(|i| {
            let (p, instance_seed) = campaign_instance(seed, i);
            verify_problem(&format!("rand-{seed}-{i:05}"), &p, instance_seed, config).records
        })
        .collect();
    Ok(VerificationReport::new(records))
}

/// A fixture question, named by the operation it runs.
#[derive(Clone, Debug, PartialEq)]
pub enum Query {
    FeasibleL(DualCandidateL),
    Member(ImageSet, QVector),
    Vertices,
    EfficientVertices,
    DualNonempty,
    /// Every efficient vertex yields a feasible, value-matching,
    /// complementary dual point.
    StrongDuality,
    /// Primal points recovered from the dual values of every efficient vertex.
    RoundTrip,
}

impl Query {
    pub fn label(&self) -> String {
        match self {
            Query::FeasibleL(c) => format!("check-feasible-l {} {} {}", c.lambda, c.z, c.v),
            Query::Member(set, d) => format!("member-{} {d}", set_name(*set)),
            Query::Vertices => "vertices".into(),
            Query::EfficientVertices => "efficient-vertices".into(),
            Query::DualNonempty => "dual-nonempty".into(),
            Query::StrongDuality => "strong-duality-construction".into(),
            Query::RoundTrip => "duality-round-trip".into(),
        }
    }
}

fn set_name(set: ImageSet) -> &'static str {
    match set {
        ImageSet::HB => "hB",
        ImageSet::HL => "hL",
        ImageSet::HJ => "hJ",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Expected {
    Bool(bool),
    Points(Vec<QVector>),
}

pub struct Fixture {
    pub name: &'static str,
    pub problem: VlpProblem,
    pub expected: Vec<(Query, Expected)>,
}

fn evaluate(p: &VlpProblem, q: &Query) -> Result<Expected> {
    Ok(match q {
        Query::FeasibleL(c) => Expected::Bool(check_feasible_l(p, c)?),
        Query::Member(set, d) => Expected::Bool(membership(p, *set, d)?.member),
        Query::Vertices => Expected::Points(enumerate_vertices(p)?),
        Query::EfficientVertices => Expected::Points(efficient_vertices(p)?.into_iter().map(|(x, _)| x).collect()),
        Query::DualNonempty => Expected::Bool(dual_b_nonempty(p)?),
        Query::StrongDuality => {
            let mut ok = true;
            for (x, cert) in efficient_vertices(p)? {
                let c = construct_dual_solution(p, &x, &cert)?;
                ok &= check_feasible_d(p, &c)?
                    && objective_d(&c, p)? == p.image(&x)?
                    && complementarity_gap(p, &x, &c)?.is_zero();
            }
            Expected::Bool(ok)
        }
        Query::RoundTrip => {
            let mut recovered = Vec::new();
            for (x, cert) in efficient_vertices(p)? {
                let c = construct_dual_solution(p, &x, &cert)?;
                let h = objective_d(&c, p)?;
                match recovers_efficiently(p, &h)? {
                    Some(y) => recovered.push(y),
                    None => return Ok(Expected::Points(Vec::new())),
                }
            }
            Expected::Points(recovered)
        }
    })
}

fn ints(rows: &[&[i64]]) -> QMatrix {
    QMatrix::from_int_rows(rows)
}

fn v(x: &[i64]) -> QVector {
    QVector::from_ints(x)
}

pub const FIXTURE_NAMES: &[&str] = &["FIX-GAP", "FIX-ZB", "FIX-SEG"];

pub fn fixture(name: &str) -> Result<Fixture> {
    let orthant = OrderingCone::orthant(2);
    let f = match name {
        "FIX-GAP" => Fixture {
            name: "FIX-GAP",
            problem: VlpProblem::new(QMatrix::zeros(2, 1), ints(&[&[1], &[1]]), v(&[-1, -1]), orthant)?,
            expected: vec![
                (
                    Query::FeasibleL(DualCandidateL {
                        lambda: v(&[1, 1]),
                        z: v(&[0, 0]),
                        v: v(&[-1, -1]),
                    }),
                    Expected::Bool(true),
                ),
                (Query::Member(ImageSet::HL, v(&[-1, -1])), Expected::Bool(true)),
                (Query::Member(ImageSet::HB, v(&[-1, -1])), Expected::Bool(false)),
                (Query::Vertices, Expected::Points(vec![])),
                (Query::DualNonempty, Expected::Bool(true)),
            ],
        },
        "FIX-ZB" => Fixture {
            name: "FIX-ZB",
            problem: VlpProblem::new(ints(&[&[-1, 1], &[1, -1]]), ints(&[&[0, 0]]), v(&[0]), orthant)?,
            expected: vec![
                (Query::Member(ImageSet::HJ, v(&[1, -1])), Expected::Bool(false)),
                (Query::Member(ImageSet::HB, v(&[1, -1])), Expected::Bool(true)),
                (Query::EfficientVertices, Expected::Points(vec![v(&[0, 0])])),
                (Query::StrongDuality, Expected::Bool(true)),
            ],
        },
        "FIX-SEG" => Fixture {
            name: "FIX-SEG",
            problem: VlpProblem::new(QMatrix::identity(2), ints(&[&[1, 1]]), v(&[1]), orthant)?,
            expected: vec![
                (Query::EfficientVertices, Expected::Points(vec![v(&[1, 0]), v(&[0, 1])])),
                (Query::StrongDuality, Expected::Bool(true)),
                (Query::RoundTrip, Expected::Points(vec![v(&[1, 0]), v(&[0, 1])])),
            ],
        },
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    Ok(f)
}

/// Seed used for the per-instance suite on fixtures.
pub const FIXTURE_SEED: u64 = 0;

/// Checks every pinned expectation exactly, then runs the per-instance suite.
pub fn run_fixture(name: &str) -> Result<VerificationReport> {
    let f = fixture(name)?;
    let mut records = Vec::new();
    for (query, expected) in &f.expected {
        let t = Instant::now();
        let observed = evaluate(&f.problem, query);
        let ms = millis(t);
        let label = format!("expect {}", query.label());
        let (status, witness) = match observed {
            Ok(obs) if &obs == expected => (Status::Pass, json!({"executed": 1, "observed": obs})),
            Ok(obs) => (
                Status::Fail,
                json!({"executed": 1, "detail": "unexpected outcome", "expected": expected, "observed": obs, "problem": problem_value(&f.problem)}),
            ),
            Err(e) => (
                Status::Fail,
                json!({"executed": 1, "detail": e.to_string(), "expected": expected, "problem": problem_value(&f.problem)}),
            ),
        };
        records.push(CheckRecord {
            check: label,
            instance: f.name.to_string(),
            status,
            witness: Some(witness),
            elapsed_ms: ms,
        });
    }
    let suite = verify_problem(f.name, &f.problem, FIXTURE_SEED, &CampaignConfig::default());
    Ok(VerificationReport::new(records).merge(suite))
}

pub fn run_all_fixtures() -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    for name in FIXTURE_NAMES {
        report = report.merge(run_fixture(name)?);
    }
    Ok(report)
}

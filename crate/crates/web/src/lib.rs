//! Browser bindings. Each export takes and returns JSON text so the page can
//! stay plain JavaScript; the same functions run natively in tests.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use vecdual::duality::{
    complementarity_gap, construct_dual_solution, dual_b_nonempty, membership, primal_empty, ImageSet,
};
use vecdual::efficiency::{certify, enumerate_vertices, EfficiencyCertificate};
use vecdual::harness::{fixture, FIXTURE_NAMES};
use vecdual::model::{load_problem, objective_d};
use vecdual::{QVector, VlpProblem};

fn problem(text: &str) -> Result<VlpProblem, String> {
    load_problem(text).map_err(|e| e.to_string())
}

fn vector(text: &str, dim: usize, what: &str) -> Result<QVector, String> {
    let v: QVector = serde_json::from_str(text).map_err(|e| format!("{what}: {e}"))?;
    v.check_dim(dim, what).map_err(|e| e.to_string())?;
    Ok(v)
}

fn text(v: Value) -> String {
    v.to_string()
}

/// Names of the built-in example problems.
#[wasm_bindgen]
pub fn example_names() -> String {
    text(json!(FIXTURE_NAMES))
}

/// Problem JSON of a built-in example.
#[wasm_bindgen]
pub fn example_problem(name: &str) -> Result<String, String> {
    fixture(name).map(|f| f.problem.to_json()).map_err(|e| e.to_string())
}

/// Vertices with their images and efficiency, plus the emptiness of both
/// feasible sets.
#[wasm_bindgen]
pub fn analyze(problem_json: &str) -> Result<String, String> {
    let p = problem(problem_json)?;
    let err = |e: vecdual::Error| e.to_string();
    let mut vertices = Vec::new();
    for x in enumerate_vertices(&p).map_err(err)? {
        let cert = certify(&p, &x).map_err(err)?;
        let efficient = matches!(cert, EfficiencyCertificate::EfficientWithScalarization { .. });
        vertices.push(json!({"x": x, "image": p.image(&x).map_err(err)?, "efficient": efficient, "certificate": cert}));
    }
    Ok(text(json!({
        "k": p.k(),
        "vertices": vertices,
        "primal_empty": primal_empty(&p).map_err(err)?,
        "dual_nonempty": dual_b_nonempty(&p).map_err(err)?,
    })))
}

/// Membership of one value in each of the three dual images.
#[wasm_bindgen]
pub fn classify(problem_json: &str, value_json: &str) -> Result<String, String> {
    let p = problem(problem_json)?;
    let d = vector(value_json, p.k(), "value")?;
    let mut out = serde_json::Map::new();
    out.insert("value".into(), json!(d));
    for (key, set) in [("hJ", ImageSet::HJ), ("hB", ImageSet::HB), ("hL", ImageSet::HL)] {
        let v = membership(&p, set, &d).map_err(|e| e.to_string())?;
        out.insert(key.into(), json!({"member": v.member, "witness": v.candidate}));
    }
    Ok(text(Value::Object(out)))
}

/// Dual solution attaining the image of an efficient point, or the reason
/// there is none.
#[wasm_bindgen]
pub fn dual_at(problem_json: &str, point_json: &str) -> Result<String, String> {
    let p = problem(problem_json)?;
    let x = vector(point_json, p.n(), "point")?;
    let err = |e: vecdual::Error| e.to_string();
    let cert = certify(&p, &x).map_err(err)?;
    if !matches!(cert, EfficiencyCertificate::EfficientWithScalarization { .. }) {
        return Ok(text(json!({"constructed": false, "certificate": cert})));
    }
    let c = construct_dual_solution(&p, &x, &cert).map_err(err)?;
    Ok(text(json!({
        "constructed": true,
        "candidate": c,
        "objective": objective_d(&c, &p).map_err(err)?,
        "gap": complementarity_gap(&p, &x, &c).map_err(err)?.to_string(),
    })))
}

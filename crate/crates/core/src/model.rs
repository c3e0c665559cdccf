//! The primal problem `Min { Lx : x ∈ R^n_+, Ax = b }` ordered by a cone `K`,
//! and plain-data candidates for its vector duals.
//!
//! Problem files are JSON:
//!
//! ```text
//! {"n": 1, "m": 2, "k": 2,
//!  "L": [["0"], ["0"]], "A": [["1"], ["1"]], "b": ["-1", "-1"],
//!  "cone": {"orthant": 2}}
//! ```
//!
//! `cone` may also be `{"dim": k, "generators": [[...], ...]}`.

use serde::{Deserialize, Serialize};

use crate::cone::{ConeSpec, OrderingCone};
use crate::error::{Error, Result};
use crate::exact::{QMatrix, QVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VlpProblem {
    l: QMatrix,
    a: QMatrix,
    b: QVector,
    cone: OrderingCone,
}

impl VlpProblem {
    pub fn new(l: QMatrix, a: QMatrix, b: QVector, cone: OrderingCone) -> Result<Self> {
        let (k, n, m) = (l.rows(), l.cols(), a.rows());
        if n == 0 || k == 0 || m == 0 {
            return Err(Error::dims("n, m and k must all be at least 1"));
        }
        if a.cols() != n {
            return Err(Error::dims(format!("A has {} columns but L has {n}", a.cols())));
        }
        b.check_dim(m, "b")?;
        if cone.dim() != k {
            return Err(Error::dims(format!(
                "cone has dimension {} but L has {k} rows",
                cone.dim()
            )));
        }
        Ok(VlpProblem { l, a, b, cone })
    }

    /// Objective matrix `L` (k x n).
    pub fn l(&self) -> &QMatrix {
        &self.l
    }

    /// Constraint matrix `A` (m x n).
    pub fn a(&self) -> &QMatrix {
        &self.a
    }

    pub fn b(&self) -> &QVector {
        &self.b
    }

    pub fn cone(&self) -> &OrderingCone {
        &self.cone
    }

    pub fn n(&self) -> usize {
        self.l.cols()
    }

    pub fn m(&self) -> usize {
        self.a.rows()
    }

    pub fn k(&self) -> usize {
        self.l.rows()
    }

    /// Same data, different ordering cone.
    pub fn with_cone(&self, cone: OrderingCone) -> Result<Self> {
        Self::new(self.l.clone(), self.a.clone(), self.b.clone(), cone)
    }

    /// `L - U A`.
    pub fn reduced_objective(&self, u: &QMatrix) -> Result<QMatrix> {
        self.check_u(u)?;
        self.l.sub_mat(&u.mul_mat(&self.a)?)
    }

    pub(crate) fn check_u(&self, u: &QMatrix) -> Result<()> {
        if u.rows() != self.k() || u.cols() != self.m() {
            return Err(Error::dims(format!(
                "U is {}x{}, expected {}x{}",
                u.rows(),
                u.cols(),
                self.k(),
                self.m()
            )));
        }
        Ok(())
    }

    pub fn image(&self, x: &QVector) -> Result<QVector> {
        self.l.mul_vec(x)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ProblemFile::from(self)).expect("problem serializes")
    }
}

pub fn primal_feasible(p: &VlpProblem, x: &QVector) -> Result<bool> {
    x.check_dim(p.n(), "x")?;
    Ok(x.is_nonnegative() && &p.a.mul_vec(x)? == p.b())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    n: usize,
    m: usize,
    k: usize,
    #[serde(rename = "L")]
    l: Vec<QVector>,
    #[serde(rename = "A")]
    a: Vec<QVector>,
    b: QVector,
    cone: serde_json::Value,
}

impl From<&VlpProblem> for ProblemFile {
    fn from(p: &VlpProblem) -> Self {
        ProblemFile {
            n: p.n(),
            m: p.m(),
            k: p.k(),
            l: p.l.row_vectors(),
            a: p.a.row_vectors(),
            b: p.b.clone(),
            cone: serde_json::to_value(ConeSpec::from(&p.cone)).expect("cone serializes"),
        }
    }
}

fn matrix_field(name: &str, rows: Vec<QVector>, expect_rows: usize, expect_cols: usize, dims: &str) -> Result<QMatrix> {
    if rows.len() != expect_rows {
        return Err(Error::parse(
            format!("field `{name}`"),
            format!("has {} rows, expected {expect_rows} ({dims})", rows.len()),
        ));
    }
    for (i, r) in rows.iter().enumerate() {
        if r.dim() != expect_cols {
            return Err(Error::parse(
                format!("field `{name}` row {i}"),
                format!("has {} entries, expected n = {expect_cols}", r.dim()),
            ));
        }
    }
    Ok(QMatrix::from_rows(rows, expect_cols).expect("row widths checked"))
}

/// Parses and validates a problem file.
pub fn load_problem(text: &str) -> Result<VlpProblem> {
    let file: ProblemFile = serde_json::from_str(text).map_err(|e| {
        Error::parse(
            format!("problem file line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    if file.n == 0 || file.m == 0 || file.k == 0 {
        return Err(Error::parse("fields `n`, `m`, `k`", "must all be at least 1"));
    }
    let l = matrix_field("L", file.l, file.k, file.n, "k")?;
    let a = matrix_field("A", file.a, file.m, file.n, "m")?;
    if file.b.dim() != file.m {
        return Err(Error::parse(
            "field `b`",
            format!("has {} entries, expected m = {}", file.b.dim(), file.m),
        ));
    }
    let spec: ConeSpec = serde_json::from_value(file.cone).map_err(|e| Error::parse("field `cone`", e.to_string()))?;
    if spec.dim() != file.k {
        return Err(Error::parse(
            "field `cone`",
            format!("has dimension {}, expected k = {}", spec.dim(), file.k),
        ));
    }
    let cone = spec.build()?;
    VlpProblem::new(l, a, file.b, cone)
}

/// Candidate for the dual with objective `h(λ, U, v) = U b + v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualCandidateD {
    pub lambda: QVector,
    #[serde(rename = "U")]
    pub u: QMatrix,
    pub v: QVector,
}

/// Candidate for the dual with objective `h^J(λ, U) = U b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualCandidateJ {
    pub lambda: QVector,
    #[serde(rename = "U")]
    pub u: QMatrix,
}

/// Candidate for the Lagrange-type dual with objective `h^L(λ, z, v) = v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualCandidateL {
    pub lambda: QVector,
    pub z: QVector,
    pub v: QVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UFlavor {
    /// No-domination condition under `R^k_+`; defined only for orthant cones.
    Orthant,
    /// No-domination condition under `K`.
    Cone,
}

/// Candidate `U` for the duals whose feasibility is a no-domination condition
/// on `(L - U A)(R^n_+)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualCandidateU {
    #[serde(rename = "U")]
    pub u: QMatrix,
    pub flavor: UFlavor,
}

impl DualCandidateD {
    pub fn project_j(&self) -> DualCandidateJ {
        DualCandidateJ {
            lambda: self.lambda.clone(),
            u: self.u.clone(),
        }
    }
}

fn check_lambda(p: &VlpProblem, lambda: &QVector) -> Result<()> {
    lambda.check_dim(p.k(), "lambda")
}

/// `U b + v`.
pub fn objective_d(c: &DualCandidateD, p: &VlpProblem) -> Result<QVector> {
    check_lambda(p, &c.lambda)?;
    c.v.check_dim(p.k(), "v")?;
    Ok(&objective_u(&c.u, p)? + &c.v)
}

/// `U b`.
pub fn objective_j(c: &DualCandidateJ, p: &VlpProblem) -> Result<QVector> {
    check_lambda(p, &c.lambda)?;
    objective_u(&c.u, p)
}

/// `v`.
pub fn objective_l(c: &DualCandidateL) -> QVector {
    c.v.clone()
}

pub(crate) fn objective_u(u: &QMatrix, p: &VlpProblem) -> Result<QVector> {
    p.check_u(u)?;
    u.mul_vec(p.b())
}

//! Efficiency and proper efficiency of primal points, vertex enumeration,
//! and the recession test on the image set.
//!
//! Efficiency is always decided by a domination LP, never by comparing
//! vertex images: a dominating point need not be a vertex.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, solve_linear_system, QMatrix, QVector};
use crate::lp::{solve_general, solve_lp, GeneralLp, GeneralOutcome, LinearProgram, LpOutcome, Relation, VarDomain};
use crate::model::{primal_feasible, VlpProblem};

/// Default cap on the number of column subsets vertex enumeration may visit.
pub const DEFAULT_BASIS_LIMIT: u128 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EfficiencyCertificate {
    /// `λ ∈ K^{*0}` and `η` with `L^T λ + A^T η >= 0` and
    /// `λ^T (L x̄) + η^T b = 0`: `x̄` minimizes `λ^T L x` over the feasible set.
    EfficientWithScalarization { lambda: QVector, eta: QVector },
    /// A feasible `x'` with `L x' <=_K L x̄`, `L x' != L x̄`.
    Dominated { dominator: QVector },
    /// As `Dominated`, found along an unbounded direction of the domination LP.
    UnboundedDomination { dominator: QVector },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominationVerdict {
    Efficient,
    Dominated { dominator: QVector, via_ray: bool },
}

impl DominationVerdict {
    pub fn is_efficient(&self) -> bool {
        matches!(self, DominationVerdict::Efficient)
    }
}

/// Maximizes `Σ μ` over `{(x, μ) >= 0 : F x = f, M x + G μ = target}`.
/// A positive optimum or an unbounded direction yields an `x` whose image
/// `M x` lies strictly `K`-below `target`.
pub(crate) fn domination_lp(
    fixed: &QMatrix,
    fixed_rhs: &QVector,
    image: &QMatrix,
    target: &QVector,
    generators: &QMatrix,
) -> Result<Option<DominationVerdict>> {
    let (n, p) = (image.cols(), generators.cols());
    let rows = fixed.rows() + image.rows();
    let mut matrix = QMatrix::zeros(rows, n + p);
    for i in 0..fixed.rows() {
        for j in 0..n {
            matrix.set(i, j, fixed.get(i, j).clone());
        }
    }
    for i in 0..image.rows() {
        let r = fixed.rows() + i;
        for j in 0..n {
            matrix.set(r, j, image.get(i, j).clone());
        }
        for j in 0..p {
            matrix.set(r, n + j, generators.get(i, j).clone());
        }
    }
    let objective = QVector::zeros(n).concat(&QVector::new(vec![int(-1); p]));
    let lp = LinearProgram::new(objective, matrix, fixed_rhs.concat(target))?;
    Ok(match solve_lp(&lp) {
        LpOutcome::Infeasible { .. } => None,
        LpOutcome::Optimal { x, value, .. } => Some(if value.is_zero() {
            DominationVerdict::Efficient
        } else {
            DominationVerdict::Dominated {
                dominator: x.slice(0, n),
                via_ray: false,
            }
        }),
        LpOutcome::Unbounded { x0, ray } => Some(DominationVerdict::Dominated {
            dominator: (&x0 + &ray).slice(0, n),
            via_ray: true,
        }),
    })
}

fn require_feasible(p: &VlpProblem, x: &QVector) -> Result<()> {
    if primal_feasible(p, x)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{x} is not primal feasible")))
    }
}

/// Decides whether `x̄` is efficient. Precondition: `x̄` is feasible.
pub fn is_efficient(p: &VlpProblem, x_bar: &QVector) -> Result<DominationVerdict> {
    require_feasible(p, x_bar)?;
    let target = p.image(x_bar)?;
    domination_lp(p.a(), p.b(), p.l(), &target, &p.cone().generator_matrix())?
        .ok_or_else(|| Error::Invariant("domination LP infeasible at a feasible point".into()))
}

/// Finds `(λ, η)` proving that `x̄` minimizes some `λ^T L x` with
/// `λ ∈ K^{*0}`, or `None`.
pub fn proper_efficiency_certificate(p: &VlpProblem, x_bar: &QVector) -> Result<Option<EfficiencyCertificate>> {
    require_feasible(p, x_bar)?;
    let (k, m) = (p.k(), p.m());
    let mut system = GeneralLp::free(k + m);
    for g in p.cone().generators() {
        system.add_constraint(g.concat(&QVector::zeros(m)), Relation::Ge, int(1))?;
    }
    for j in 0..p.n() {
        system.add_constraint(p.l().col(j).concat(&p.a().col(j)), Relation::Ge, int(0))?;
    }
    system.add_constraint(p.image(x_bar)?.concat(p.b()), Relation::Eq, int(0))?;
    Ok(system
        .feasible_point()?
        .map(|sol| EfficiencyCertificate::EfficientWithScalarization {
            lambda: sol.slice(0, k),
            eta: sol.slice(k, k + m),
        }))
}

/// Efficiency verdict together with its certificate. Every efficient point
/// gets a scalarization certificate; failing to find one is an invariant
/// violation.
pub fn certify(p: &VlpProblem, x_bar: &QVector) -> Result<EfficiencyCertificate> {
    match is_efficient(p, x_bar)? {
        DominationVerdict::Efficient => proper_efficiency_certificate(p, x_bar)?
            .ok_or_else(|| Error::Invariant(format!("efficient point {x_bar} has no scalarization certificate"))),
        DominationVerdict::Dominated { dominator, via_ray } => Ok(if via_ray {
            EfficiencyCertificate::UnboundedDomination { dominator }
        } else {
            EfficiencyCertificate::Dominated { dominator }
        }),
    }
}

/// Checks a certificate against `x̄` by substitution.
pub fn check_certificate(p: &VlpProblem, x_bar: &QVector, cert: &EfficiencyCertificate) -> Result<(), String> {
    let err = |e: Error| e.to_string();
    let image = p.image(x_bar).map_err(err)?;
    match cert {
        EfficiencyCertificate::EfficientWithScalarization { lambda, eta } => {
            if lambda.dim() != p.k() || eta.dim() != p.m() {
                return Err("certificate has the wrong shape".into());
            }
            if !p.cone().in_quasi_interior(lambda).map_err(err)? {
                return Err(format!("λ = {lambda} is not in the quasi-interior of K*"));
            }
            let reduced = &p.l().tr_mul_vec(lambda).map_err(err)? + &p.a().tr_mul_vec(eta).map_err(err)?;
            if !reduced.is_nonnegative() {
                return Err(format!("L^T λ + A^T η = {reduced} has a negative entry"));
            }
            let gap = lambda.dot(&image) + p.b().dot(eta);
            if !gap.is_zero() {
                return Err(format!("λ^T L x̄ + b^T η = {gap} != 0"));
            }
            Ok(())
        }
        EfficiencyCertificate::Dominated { dominator } | EfficiencyCertificate::UnboundedDomination { dominator } => {
            if !primal_feasible(p, dominator).map_err(err)? {
                return Err(format!("dominator {dominator} is infeasible"));
            }
            let dom_image = p.image(dominator).map_err(err)?;
            if p.cone().strictly_below(&dom_image, &image).map_err(err)? {
                Ok(())
            } else {
                Err(format!("L x' = {dom_image} does not dominate L x̄ = {image}"))
            }
        }
    }
}

fn binomial(n: usize, r: usize) -> u128 {
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let r = c.len();
    for i in (0..r).rev() {
        if c[i] < n - r + i {
            c[i] += 1;
            for j in i + 1..r {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All basic feasible solutions of `{x >= 0 : A x = b}`, deduplicated, in
/// lexicographic order of their column bases.
pub fn enumerate_basic_feasible(a: &QMatrix, b: &QVector, limit: u128) -> Result<Vec<QVector>> {
    b.check_dim(a.rows(), "right-hand side")?;
    let n = a.cols();
    let rank = a.rank();
    if rank == 0 {
        return Ok(if b.is_zero() {
            vec![QVector::zeros(n)]
        } else {
            Vec::new()
        });
    }
    let bases = binomial(n, rank);
    if bases > limit {
        return Err(Error::LimitExceeded { bases, limit });
    }
    let mut vertices: Vec<QVector> = Vec::new();
    let mut cols: Vec<usize> = (0..rank).collect();
    loop {
        let sub = a.select_columns(&cols);
        if sub.rank() == rank {
            if let Some(sol) = solve_linear_system(&sub, b)? {
                if sol.particular.is_nonnegative() {
                    let mut x = QVector::zeros(n).into_entries();
                    for (&c, v) in cols.iter().zip(sol.particular.iter()) {
                        x[c] = v.clone();
                    }
                    let x = QVector::new(x);
                    if !vertices.contains(&x) {
                        vertices.push(x);
                    }
                }
            }
        }
        if !next_combination(&mut cols, n) {
            break;
        }
    }
    Ok(vertices)
}

/// Vertices of the feasible set; empty iff the feasible set is empty.
pub fn enumerate_vertices(p: &VlpProblem) -> Result<Vec<QVector>> {
    enumerate_basic_feasible(p.a(), p.b(), DEFAULT_BASIS_LIMIT)
}

/// Efficient vertices, each with its scalarization certificate.
pub fn efficient_vertices(p: &VlpProblem) -> Result<Vec<(QVector, EfficiencyCertificate)>> {
    let mut out = Vec::new();
    for x in enumerate_vertices(p)? {
        if is_efficient(p, &x)?.is_efficient() {
            let cert = proper_efficiency_certificate(p, &x)?
                .ok_or_else(|| Error::Invariant(format!("efficient vertex {x} has no scalarization certificate")))?;
            out.push((x, cert));
        }
    }
    Ok(out)
}

/// `true` iff `{L x : x >= 0, A x = 0} ∩ (-K) = {0}`.
pub fn recession_image_pointed(p: &VlpProblem) -> Result<bool> {
    let (n, gens) = (p.n(), p.cone().generators());
    let width = n + gens.len();
    let mut system = GeneralLp::new(vec![VarDomain::NonNegative; width]);
    for i in 0..p.m() {
        system.add_constraint(p.a().row(i).concat(&QVector::zeros(gens.len())), Relation::Eq, int(0))?;
    }
    for i in 0..p.k() {
        let cone_row: QVector = gens.iter().map(|g| g[i].clone()).collect();
        system.add_constraint(p.l().row(i).concat(&cone_row), Relation::Eq, int(0))?;
    }
    system.add_constraint(QVector::new(vec![int(1); width]), Relation::Le, int(1))?;
    system.set_objective(QVector::zeros(n).concat(&QVector::new(vec![int(-1); gens.len()])))?;
    match solve_general(&system)? {
        GeneralOutcome::Optimal { value, .. } => Ok(!value.is_negative()),
        other => Err(Error::Invariant(format!(
            "normalized recession LP must be bounded and feasible, got {other:?}"
        ))),
    }
}

//! Feasibility of the five vector duals, the constructions linking them to
//! the primal problem, and exact membership tests for their image sets.
//!
//! The bilinear coupling between `λ` and `U` is removed with the substitution
//! `z = U^T λ`: a value `d` lies in `h(B)` iff some `λ ∈ K^{*0}` and `z`
//! satisfy `λ^T d = b^T z` and `L^T λ - A^T z >= 0`. A full `U` is rebuilt
//! from `(λ, z)` only when a witness is returned.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::efficiency::{check_certificate, domination_lp, is_efficient, DominationVerdict, EfficiencyCertificate};
use crate::error::{Error, Result};
use crate::exact::{int, QMatrix, QVector, Rational};
use crate::lp::{solve_lp, GeneralLp, LinearProgram, LpOutcome, Relation};
use crate::model::{
    objective_d, objective_j, objective_u, DualCandidateD, DualCandidateJ, DualCandidateL, DualCandidateU, UFlavor,
    VlpProblem,
};

/// Which dual image set a membership question is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ImageSet {
    #[serde(rename = "hB")]
    HB,
    #[serde(rename = "hL")]
    HL,
    #[serde(rename = "hJ")]
    HJ,
}

/// A dual feasible point reproducing the queried value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum DualWitness {
    D(DualCandidateD),
    J(DualCandidateJ),
    L(DualCandidateL),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipVerdict {
    pub set: ImageSet,
    pub member: bool,
    /// `(λ, z)` solving the linearized system.
    pub lambda: Option<QVector>,
    pub z: Option<QVector>,
    /// Full dual point with objective value equal to the query.
    pub candidate: Option<DualWitness>,
}

impl MembershipVerdict {
    fn absent(set: ImageSet) -> Self {
        MembershipVerdict {
            set,
            member: false,
            lambda: None,
            z: None,
            candidate: None,
        }
    }
}

fn check_lambda(p: &VlpProblem, lambda: &QVector) -> Result<()> {
    lambda.check_dim(p.k(), "lambda")
}

/// `(L - U A)^T λ >= 0` entry-wise.
fn reduced_nonnegative(p: &VlpProblem, u: &QMatrix, lambda: &QVector) -> Result<bool> {
    Ok(p.reduced_objective(u)?.tr_mul_vec(lambda)?.is_nonnegative())
}

/// `(λ, U, v) ∈ B`: `λ ∈ K^{*0}`, `λ^T v = 0`, `(L - U A)^T λ >= 0`.
pub fn check_feasible_d(p: &VlpProblem, c: &DualCandidateD) -> Result<bool> {
    check_lambda(p, &c.lambda)?;
    c.v.check_dim(p.k(), "v")?;
    Ok(p.cone().in_quasi_interior(&c.lambda)?
        && c.lambda.dot(&c.v).is_zero()
        && reduced_nonnegative(p, &c.u, &c.lambda)?)
}

/// `(λ, U) ∈ B^J`: `λ ∈ K^{*0}`, `(L - U A)^T λ >= 0`.
pub fn check_feasible_j(p: &VlpProblem, c: &DualCandidateJ) -> Result<bool> {
    check_lambda(p, &c.lambda)?;
    Ok(p.cone().in_quasi_interior(&c.lambda)? && reduced_nonnegative(p, &c.u, &c.lambda)?)
}

/// `(λ, z, v) ∈ B^L`: `λ ∈ K^{*0}`, `λ^T v - z^T b <= 0`, `L^T λ - A^T z >= 0`.
pub fn check_feasible_l(p: &VlpProblem, c: &DualCandidateL) -> Result<bool> {
    check_lambda(p, &c.lambda)?;
    c.z.check_dim(p.m(), "z")?;
    c.v.check_dim(p.k(), "v")?;
    let slack = &p.l().tr_mul_vec(&c.lambda)? - &p.a().tr_mul_vec(&c.z)?;
    Ok(p.cone().in_quasi_interior(&c.lambda)? && c.lambda.dot(&c.v) <= c.z.dot(p.b()) && slack.is_nonnegative())
}

/// Generators of the cone used by a `U` flavor's no-domination condition.
fn flavor_generators(p: &VlpProblem, flavor: UFlavor) -> Result<QMatrix> {
    match flavor {
        UFlavor::Cone => Ok(p.cone().generator_matrix()),
        UFlavor::Orthant => {
            if !p.cone().is_orthant() {
                return Err(Error::Precondition(
                    "the orthant flavor is defined only for the nonnegative orthant cone".into(),
                ));
            }
            Ok(QMatrix::identity(p.k()))
        }
    }
}

/// No `x >= 0` has `(L - U A) x` strictly below zero in the flavor's order.
pub fn check_feasible_u(p: &VlpProblem, c: &DualCandidateU) -> Result<bool> {
    let gens = flavor_generators(p, c.flavor)?;
    let reduced = p.reduced_objective(&c.u)?;
    let verdict = domination_lp(
        &QMatrix::zeros(0, p.n()),
        &QVector::zeros(0),
        &reduced,
        &QVector::zeros(p.k()),
        &gens,
    )?
    .ok_or_else(|| Error::Invariant("x = 0 is always feasible".into()))?;
    Ok(verdict.is_efficient())
}

/// `λ` with `λ^T g_i >= 1` on every generator and `(L - U A)^T λ >= 0`, if any.
/// Exists iff `(L - U A)(R^n_+) ∩ (-K) = {0}`.
pub fn no_domination_multiplier(p: &VlpProblem, u: &QMatrix) -> Result<Option<QVector>> {
    let reduced = p.reduced_objective(u)?;
    let mut system = GeneralLp::free(p.k());
    for g in p.cone().generators() {
        system.add_constraint(g.clone(), Relation::Ge, int(1))?;
    }
    for j in 0..p.n() {
        system.add_constraint(reduced.col(j), Relation::Ge, int(0))?;
    }
    system.feasible_point()
}

/// `g / (λ^T g)` for the first generator with positive product.
fn unit_generator(p: &VlpProblem, lambda: &QVector) -> Result<QVector> {
    p.cone()
        .normalized_generator(lambda)?
        .ok_or_else(|| Error::Precondition(format!("λ = {lambda} is not in the quasi-interior of K*")))
}

/// Builds a dual point with objective `L x̄` from a scalarization certificate
/// `(λ̄, η̄)`: `Ū = -λ̃ η̄^T`, `v̄ = L x̄ - Ū b`.
pub fn construct_dual_solution(
    p: &VlpProblem,
    x_bar: &QVector,
    cert: &EfficiencyCertificate,
) -> Result<DualCandidateD> {
    let EfficiencyCertificate::EfficientWithScalarization { lambda, eta } = cert else {
        return Err(Error::InvalidCertificate("expected a scalarization certificate".into()));
    };
    check_certificate(p, x_bar, cert).map_err(Error::InvalidCertificate)?;
    let tilde = unit_generator(p, lambda)?;
    let u = QMatrix::outer(&-&tilde, eta);
    let v = &p.image(x_bar)? - &u.mul_vec(p.b())?;
    Ok(DualCandidateD {
        lambda: lambda.clone(),
        u,
        v,
    })
}

/// `x̄^T (L - U A)^T λ`.
pub fn complementarity_gap(p: &VlpProblem, x_bar: &QVector, c: &DualCandidateD) -> Result<Rational> {
    Ok(p.reduced_objective(&c.u)?.tr_mul_vec(&c.lambda)?.dot(x_bar))
}

/// Some feasible `x̄` with `L x̄ = d`, if any.
pub fn recover_primal(p: &VlpProblem, d: &QVector) -> Result<Option<QVector>> {
    d.check_dim(p.k(), "value")?;
    let rows: Vec<QVector> = p.a().row_vectors().into_iter().chain(p.l().row_vectors()).collect();
    let lp = LinearProgram::new(QVector::zeros(p.n()), QMatrix::from_rows(rows, p.n())?, p.b().concat(d))?;
    Ok(match solve_lp(&lp) {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    })
}

/// Solves `λ^T g_i >= 1`, `L^T λ - A^T z >= 0` and, if given,
/// `λ^T d - b^T z (relation) 0`.
fn lambda_z_system(p: &VlpProblem, value: Option<(&QVector, Relation)>) -> Result<Option<(QVector, QVector)>> {
    let (k, m) = (p.k(), p.m());
    let mut system = GeneralLp::free(k + m);
    for g in p.cone().generators() {
        system.add_constraint(g.concat(&QVector::zeros(m)), Relation::Ge, int(1))?;
    }
    for j in 0..p.n() {
        system.add_constraint(p.l().col(j).concat(&-&p.a().col(j)), Relation::Ge, int(0))?;
    }
    if let Some((d, relation)) = value {
        d.check_dim(k, "value")?;
        system.add_constraint(d.concat(&-p.b()), relation, int(0))?;
    }
    Ok(system
        .feasible_point()?
        .map(|sol| (sol.slice(0, k), sol.slice(k, k + m))))
}

/// Rank-one `U = λ̃ z^T`, satisfying `U^T λ = z`.
fn rank_one_u(p: &VlpProblem, lambda: &QVector, z: &QVector) -> Result<QMatrix> {
    Ok(QMatrix::outer(&unit_generator(p, lambda)?, z))
}

/// Membership of `d` in `h(B)`, with a reconstructed `(λ, U, v) ∈ B`.
pub fn membership_hb(p: &VlpProblem, d: &QVector) -> Result<MembershipVerdict> {
    let Some((lambda, z)) = lambda_z_system(p, Some((d, Relation::Eq)))? else {
        return Ok(MembershipVerdict::absent(ImageSet::HB));
    };
    let u = rank_one_u(p, &lambda, &z)?;
    let v = d - &u.mul_vec(p.b())?;
    let candidate = DualCandidateD {
        lambda: lambda.clone(),
        u,
        v,
    };
    if !check_feasible_d(p, &candidate)? || &objective_d(&candidate, p)? != d {
        return Err(Error::Invariant(format!("reconstructed witness for {d} is not in B")));
    }
    Ok(MembershipVerdict {
        set: ImageSet::HB,
        member: true,
        lambda: Some(lambda),
        z: Some(z),
        candidate: Some(DualWitness::D(candidate)),
    })
}

/// Membership of `d` in `h^L(B^L)`.
pub fn membership_hl(p: &VlpProblem, d: &QVector) -> Result<MembershipVerdict> {
    let Some((lambda, z)) = lambda_z_system(p, Some((d, Relation::Le)))? else {
        return Ok(MembershipVerdict::absent(ImageSet::HL));
    };
    let candidate = DualCandidateL {
        lambda: lambda.clone(),
        z: z.clone(),
        v: d.clone(),
    };
    if !check_feasible_l(p, &candidate)? {
        return Err(Error::Invariant(format!("reconstructed witness for {d} is not in B^L")));
    }
    Ok(MembershipVerdict {
        set: ImageSet::HL,
        member: true,
        lambda: Some(lambda),
        z: Some(z),
        candidate: Some(DualWitness::L(candidate)),
    })
}

/// Membership of `d` in `h^J(B^J)`. For `b != 0` this is the system of
/// [`membership_hb`] with a rank-two `U`; for `b = 0` the image is `{0}` or
/// empty.
pub fn membership_hj(p: &VlpProblem, d: &QVector) -> Result<MembershipVerdict> {
    d.check_dim(p.k(), "value")?;
    let b = p.b();
    let (lambda, z, u) = if b.is_zero() {
        if !d.is_zero() {
            return Ok(MembershipVerdict::absent(ImageSet::HJ));
        }
        let Some((lambda, z)) = lambda_z_system(p, None)? else {
            return Ok(MembershipVerdict::absent(ImageSet::HJ));
        };
        let u = rank_one_u(p, &lambda, &z)?;
        (lambda, z, u)
    } else {
        let Some((lambda, z)) = lambda_z_system(p, Some((d, Relation::Eq)))? else {
            return Ok(MembershipVerdict::absent(ImageSet::HJ));
        };
        // U = λ̃ z^T + (d - λ̃ z^T b) u^T with u^T b = 1 keeps U^T λ = z and
        // gives U b = d, because λ^T d = b^T z.
        let tilde = unit_generator(p, &lambda)?;
        let u_dir = b.scale(&b.dot(b).recip());
        let w = d - &tilde.scale(&z.dot(b));
        let u = QMatrix::outer(&tilde, &z).add_mat(&QMatrix::outer(&w, &u_dir))?;
        (lambda, z, u)
    };
    let candidate = DualCandidateJ {
        lambda: lambda.clone(),
        u,
    };
    if !check_feasible_j(p, &candidate)? || &objective_j(&candidate, p)? != d {
        return Err(Error::Invariant(format!("reconstructed witness for {d} is not in B^J")));
    }
    Ok(MembershipVerdict {
        set: ImageSet::HJ,
        member: true,
        lambda: Some(lambda),
        z: Some(z),
        candidate: Some(DualWitness::J(candidate)),
    })
}

pub fn membership(p: &VlpProblem, set: ImageSet, d: &QVector) -> Result<MembershipVerdict> {
    match set {
        ImageSet::HB => membership_hb(p, d),
        ImageSet::HL => membership_hl(p, d),
        ImageSet::HJ => membership_hj(p, d),
    }
}

fn require_feasible_h(p: &VlpProblem, u: &QMatrix) -> Result<()> {
    let c = DualCandidateU {
        u: u.clone(),
        flavor: UFlavor::Cone,
    };
    if check_feasible_u(p, &c)? {
        Ok(())
    } else {
        Err(Error::Precondition("U not feasible for D^H".into()))
    }
}

/// `d ∈ U b + Min((L - U A)(R^n_+), K)`. Requires `U` feasible for the
/// `H` flavor.
pub fn h_value_membership(p: &VlpProblem, u: &QMatrix, d: &QVector) -> Result<bool> {
    require_feasible_h(p, u)?;
    d.check_dim(p.k(), "value")?;
    let target = d - &objective_u(u, p)?;
    let verdict = domination_lp(
        &QMatrix::zeros(0, p.n()),
        &QVector::zeros(0),
        &p.reduced_objective(u)?,
        &target,
        &p.cone().generator_matrix(),
    )?;
    Ok(matches!(verdict, Some(DominationVerdict::Efficient)))
}

/// Turns `U` feasible for the `H` flavor and a minimal point `x̄` of
/// `(L - U A)(R^n_+)` into `(γ, U, (L - U A) x̄) ∈ B` with the same objective.
pub fn map_dh_to_d(p: &VlpProblem, u: &QMatrix, x_bar: &QVector) -> Result<DualCandidateD> {
    require_feasible_h(p, u)?;
    x_bar.check_dim(p.n(), "x")?;
    if !x_bar.is_nonnegative() {
        return Err(Error::Precondition(format!("{x_bar} is not nonnegative")));
    }
    let reduced = p.reduced_objective(u)?;
    let v = reduced.mul_vec(x_bar)?;
    let minimal = domination_lp(
        &QMatrix::zeros(0, p.n()),
        &QVector::zeros(0),
        &reduced,
        &v,
        &p.cone().generator_matrix(),
    )?;
    if !matches!(minimal, Some(DominationVerdict::Efficient)) {
        return Err(Error::Precondition(format!(
            "(L - UA) x̄ = {v} is not minimal in the image cone"
        )));
    }
    let mut system = GeneralLp::free(p.k());
    for g in p.cone().generators() {
        system.add_constraint(g.clone(), Relation::Ge, int(1))?;
    }
    for j in 0..p.n() {
        system.add_constraint(reduced.col(j), Relation::Ge, int(0))?;
    }
    system.add_constraint(v.clone(), Relation::Eq, int(0))?;
    let gamma = system
        .feasible_point()?
        .ok_or_else(|| Error::Invariant(format!("no multiplier supports the minimal value {v}")))?;
    Ok(DualCandidateD {
        lambda: gamma,
        u: u.clone(),
        v,
    })
}

/// `(λ, U, v) ↦ (λ, U^T λ, U b + v)`, preserving the objective value.
pub fn map_d_to_dl(p: &VlpProblem, c: &DualCandidateD) -> Result<DualCandidateL> {
    if !check_feasible_d(p, c)? {
        return Err(Error::Precondition("candidate is not feasible for D".into()));
    }
    Ok(DualCandidateL {
        lambda: c.lambda.clone(),
        z: c.u.tr_mul_vec(&c.lambda)?,
        v: objective_d(c, p)?,
    })
}

/// `(λ, z)` with `λ ∈ K^{*0}` and `L^T λ - A^T z >= 0`; completes to a
/// point of `B` with `U = λ̃ z^T`, `v = 0`.
pub fn dual_b_witness(p: &VlpProblem) -> Result<Option<DualCandidateD>> {
    let Some((lambda, z)) = lambda_z_system(p, None)? else {
        return Ok(None);
    };
    let u = rank_one_u(p, &lambda, &z)?;
    Ok(Some(DualCandidateD {
        lambda,
        u,
        v: QVector::zeros(p.k()),
    }))
}

pub fn dual_b_nonempty(p: &VlpProblem) -> Result<bool> {
    Ok(dual_b_witness(p)?.is_some())
}

/// When the primal feasible set is empty, moves a point of `B` to one with a
/// strictly `K`-larger objective: `U + λ̃ z̄^T` for a Farkas vector `z̄`.
pub fn improve_dual_point(p: &VlpProblem, c: &DualCandidateD) -> Result<DualCandidateD> {
    if !check_feasible_d(p, c)? {
        return Err(Error::Precondition("candidate is not feasible for D".into()));
    }
    let lp = LinearProgram::new(QVector::zeros(p.n()), p.a().clone(), p.b().clone())?;
    let LpOutcome::Infeasible { farkas } = solve_lp(&lp) else {
        return Err(Error::Precondition("the primal feasible set is nonempty".into()));
    };
    let tilde = unit_generator(p, &c.lambda)?;
    Ok(DualCandidateD {
        lambda: c.lambda.clone(),
        u: c.u.add_mat(&QMatrix::outer(&tilde, &farkas))?,
        v: c.v.clone(),
    })
}

/// `true` iff no feasible `x ∈ R^n_+` exists with `A x = b`.
pub fn primal_empty(p: &VlpProblem) -> Result<bool> {
    let lp = LinearProgram::new(QVector::zeros(p.n()), p.a().clone(), p.b().clone())?;
    Ok(matches!(solve_lp(&lp), LpOutcome::Infeasible { .. }))
}

/// Columns `j` where `((L - U A)^T γ)_j = 0`; nonnegative combinations of
/// these unit vectors map to minimal points of the image cone.
pub fn supported_columns(p: &VlpProblem, u: &QMatrix, gamma: &QVector) -> Result<Vec<usize>> {
    let reduced = p.reduced_objective(u)?.tr_mul_vec(gamma)?;
    Ok((0..p.n()).filter(|&j| reduced[j].is_zero()).collect())
}

/// Recovers an efficient primal point for the value of an efficient dual point.
pub fn recover_efficient_primal(p: &VlpProblem, d: &QVector) -> Result<Option<QVector>> {
    let Some(x) = recover_primal(p, d)? else {
        return Ok(None);
    };
    match is_efficient(p, &x)? {
        DominationVerdict::Efficient => Ok(Some(x)),
        DominationVerdict::Dominated { .. } => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::OrderingCone;
    use crate::efficiency::efficient_vertices;

    fn v(x: &[i64]) -> QVector {
        QVector::from_ints(x)
    }

    fn gap() -> VlpProblem {
        VlpProblem::new(
            QMatrix::zeros(2, 1),
            QMatrix::from_int_rows(&[&[1], &[1]]),
            v(&[-1, -1]),
            OrderingCone::orthant(2),
        )
        .unwrap()
    }

    fn zero_rhs() -> VlpProblem {
        VlpProblem::new(
            QMatrix::from_int_rows(&[&[-1, 1], &[1, -1]]),
            QMatrix::from_int_rows(&[&[0, 0]]),
            v(&[0]),
            OrderingCone::orthant(2),
        )
        .unwrap()
    }

    fn segment() -> VlpProblem {
        VlpProblem::new(
            QMatrix::identity(2),
            QMatrix::from_int_rows(&[&[1, 1]]),
            v(&[1]),
            OrderingCone::orthant(2),
        )
        .unwrap()
    }

    fn negative_identity() -> VlpProblem {
        VlpProblem::new(
            QMatrix::from_int_rows(&[&[-1, 0], &[0, -1]]),
            QMatrix::zeros(1, 2),
            v(&[0]),
            OrderingCone::orthant(2),
        )
        .unwrap()
    }

    fn d(lambda: &[i64], u: QMatrix, vv: &[i64]) -> DualCandidateD {
        DualCandidateD {
            lambda: v(lambda),
            u,
            v: v(vv),
        }
    }

    #[test]
    fn feasibility_of_d() {
        let p = gap();
        assert!(check_feasible_d(&p, &d(&[1, 1], QMatrix::zeros(2, 2), &[1, -1])).unwrap());
        assert!(!check_feasible_d(&p, &d(&[1, 1], QMatrix::zeros(2, 2), &[-1, -1])).unwrap());
        assert!(!check_feasible_d(&p, &d(&[1, 0], QMatrix::zeros(2, 2), &[0, 0])).unwrap());
    }

    #[test]
    fn feasibility_of_j_and_l() {
        let p = gap();
        let l = DualCandidateL {
            lambda: v(&[1, 1]),
            z: v(&[0, 0]),
            v: v(&[-1, -1]),
        };
        assert!(check_feasible_l(&p, &l).unwrap());
        let j = DualCandidateJ {
            lambda: v(&[1, 1]),
            u: QMatrix::zeros(2, 2),
        };
        assert!(check_feasible_j(&p, &j).unwrap());
        let bad = DualCandidateL {
            lambda: v(&[1, 0]),
            z: v(&[0, 0]),
            v: v(&[1, 0]),
        };
        assert!(!check_feasible_l(&p, &bad).unwrap());
        let bad = DualCandidateL {
            lambda: v(&[1, 1]),
            z: v(&[0, 0]),
            v: v(&[1, 0]),
        };
        assert!(!check_feasible_l(&p, &bad).unwrap());
    }

    #[test]
    fn feasibility_of_u() {
        let h = |u| DualCandidateU {
            u,
            flavor: UFlavor::Cone,
        };
        assert!(check_feasible_u(&gap(), &h(QMatrix::zeros(2, 2))).unwrap());
        assert!(!check_feasible_u(&negative_identity(), &h(QMatrix::zeros(2, 1))).unwrap());
        let iser = DualCandidateU {
            u: QMatrix::zeros(2, 2),
            flavor: UFlavor::Orthant,
        };
        assert!(check_feasible_u(&gap(), &iser).unwrap());
        let skew = gap()
            .with_cone(OrderingCone::new(2, vec![v(&[1, 0]), v(&[1, 1])]).unwrap())
            .unwrap();
        assert!(matches!(check_feasible_u(&skew, &iser), Err(Error::Precondition(_))));
    }

    #[test]
    fn no_domination_multiplier_examples() {
        let lambda = no_domination_multiplier(&gap(), &QMatrix::zeros(2, 2))
            .unwrap()
            .unwrap();
        assert!(lambda.iter().all(|x| x >= &int(1)));
        assert_eq!(
            no_domination_multiplier(&negative_identity(), &QMatrix::zeros(2, 1)).unwrap(),
            None
        );
    }

    #[test]
    fn strong_duality_construction() {
        for p in [segment(), zero_rhs()] {
            for (x, cert) in efficient_vertices(&p).unwrap() {
                let c = construct_dual_solution(&p, &x, &cert).unwrap();
                assert!(check_feasible_d(&p, &c).unwrap());
                assert_eq!(objective_d(&c, &p).unwrap(), p.image(&x).unwrap());
                assert!(complementarity_gap(&p, &x, &c).unwrap().is_zero());
            }
        }
        let zb = zero_rhs();
        let cert = EfficiencyCertificate::EfficientWithScalarization {
            lambda: v(&[1, 1]),
            eta: v(&[0]),
        };
        let c = construct_dual_solution(&zb, &v(&[0, 0]), &cert).unwrap();
        assert!(c.u.is_zero() && c.v.is_zero());
        let bogus = EfficiencyCertificate::EfficientWithScalarization {
            lambda: v(&[1, 1]),
            eta: v(&[5]),
        };
        assert!(matches!(
            construct_dual_solution(&segment(), &v(&[1, 0]), &bogus),
            Err(Error::InvalidCertificate(_))
        ));
    }

    #[test]
    fn primal_recovery() {
        assert_eq!(recover_primal(&segment(), &v(&[1, 0])).unwrap(), Some(v(&[1, 0])));
        assert_eq!(recover_primal(&segment(), &v(&[2, 2])).unwrap(), None);
        assert_eq!(recover_primal(&gap(), &v(&[0, 0])).unwrap(), None);
    }

    #[test]
    fn image_memberships_on_two_objective_instance() {
        let p = gap();
        assert!(!membership_hb(&p, &v(&[-1, -1])).unwrap().member);
        let hb = membership_hb(&p, &v(&[1, -1])).unwrap();
        assert!(hb.member);
        assert!(membership_hl(&p, &v(&[-1, -1])).unwrap().member);
        assert!(membership_hl(&p, &v(&[1, -1])).unwrap().member);
        assert!(membership_hj(&p, &v(&[1, -1])).unwrap().member);
        assert!(!membership_hj(&p, &v(&[-1, -1])).unwrap().member);
    }

    #[test]
    fn zero_rhs_gap_between_hj_and_hb() {
        let p = zero_rhs();
        assert!(membership_hb(&p, &v(&[5, -5])).unwrap().member);
        assert!(!membership_hj(&p, &v(&[5, -5])).unwrap().member);
        assert!(membership_hj(&p, &v(&[0, 0])).unwrap().member);
        assert!(!membership_hj(&p, &v(&[1, -1])).unwrap().member);
        assert!(membership_hb(&p, &v(&[1, -1])).unwrap().member);
    }

    #[test]
    fn empty_lagrange_image() {
        let p = negative_identity();
        for d in [v(&[0, 0]), v(&[-5, 3]), v(&[1, 1])] {
            assert!(!membership_hl(&p, &d).unwrap().member);
        }
        assert!(!dual_b_nonempty(&p).unwrap());
    }

    #[test]
    fn h_values() {
        let p = gap();
        let zero = QMatrix::zeros(2, 2);
        assert!(h_value_membership(&p, &zero, &v(&[0, 0])).unwrap());
        assert!(!h_value_membership(&p, &zero, &v(&[1, 1])).unwrap());
        assert!(h_value_membership(&zero_rhs(), &QMatrix::zeros(2, 1), &v(&[1, -1])).unwrap());
        assert!(matches!(
            h_value_membership(&negative_identity(), &QMatrix::zeros(2, 1), &v(&[0, 0])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn h_value_to_d_map() {
        let c = map_dh_to_d(&gap(), &QMatrix::zeros(2, 2), &v(&[0])).unwrap();
        assert!(check_feasible_d(&gap(), &c).unwrap());
        assert_eq!(objective_d(&c, &gap()).unwrap(), v(&[0, 0]));

        let zb = zero_rhs();
        let c = map_dh_to_d(&zb, &QMatrix::zeros(2, 1), &v(&[0, 1])).unwrap();
        assert!(check_feasible_d(&zb, &c).unwrap());
        assert_eq!(objective_d(&c, &zb).unwrap(), v(&[1, -1]));
        assert!(membership_hb(&zb, &v(&[1, -1])).unwrap().member);
        // γ must satisfy γ1 = γ2 here
        assert_eq!(c.lambda[0], c.lambda[1]);
    }

    #[test]
    fn lagrange_map() {
        let p = gap();
        let l = map_d_to_dl(&p, &d(&[1, 1], QMatrix::zeros(2, 2), &[1, -1])).unwrap();
        assert_eq!(l.z, v(&[0, 0]));
        assert_eq!(l.v, v(&[1, -1]));
        assert!(check_feasible_l(&p, &l).unwrap());
        let zb = zero_rhs();
        let l = map_d_to_dl(&zb, &d(&[1, 1], QMatrix::zeros(2, 1), &[3, -3])).unwrap();
        assert_eq!(l.v, v(&[3, -3]));
        assert!(check_feasible_l(&zb, &l).unwrap());
    }

    #[test]
    fn emptiness_and_improvement() {
        assert!(dual_b_nonempty(&gap()).unwrap());
        assert!(dual_b_nonempty(&segment()).unwrap());
        let p = gap();
        let c = dual_b_witness(&p).unwrap().unwrap();
        let better = improve_dual_point(&p, &c).unwrap();
        assert!(check_feasible_d(&p, &better).unwrap());
        let (h0, h1) = (objective_d(&c, &p).unwrap(), objective_d(&better, &p).unwrap());
        assert!(p.cone().strictly_below(&h0, &h1).unwrap());
        let seg = segment();
        let c = dual_b_witness(&seg).unwrap().unwrap();
        assert!(matches!(improve_dual_point(&seg, &c), Err(Error::Precondition(_))));
    }
}

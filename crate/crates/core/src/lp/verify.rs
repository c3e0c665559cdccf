//! Certificate checks by direct substitution. Nothing here touches the
//! simplex tableau, so a solver bug cannot hide behind a verifier bug.

use num_traits::Signed;

use super::{LinearProgram, LpOutcome};
use crate::exact::{QVector, Rational};

pub fn check_optimal(p: &LinearProgram, x: &QVector, y: &QVector, value: &Rational) -> Result<(), String> {
    let a = p.eq_matrix();
    if x.dim() != p.num_vars() || y.dim() != p.num_rows() {
        return Err("certificate has the wrong shape".into());
    }
    if !x.is_nonnegative() {
        return Err(format!("x = {x} has a negative entry"));
    }
    if &a.mul_vec(x).map_err(|e| e.to_string())? != p.eq_rhs() {
        return Err(format!("A x != b for x = {x}"));
    }
    let reduced = p.objective() - &a.tr_mul_vec(y).map_err(|e| e.to_string())?;
    if !reduced.is_nonnegative() {
        return Err(format!("c - A^T y = {reduced} is not dual feasible"));
    }
    let primal = p.objective().dot(x);
    let dual = p.eq_rhs().dot(y);
    if primal != dual || &primal != value {
        return Err(format!("c^T x = {primal}, b^T y = {dual}, reported {value}"));
    }
    Ok(())
}

pub fn check_farkas(p: &LinearProgram, farkas: &QVector) -> Result<(), String> {
    if farkas.dim() != p.num_rows() {
        return Err("Farkas vector has the wrong shape".into());
    }
    let at_f = p.eq_matrix().tr_mul_vec(farkas).map_err(|e| e.to_string())?;
    if at_f.iter().any(Signed::is_positive) {
        return Err(format!("A^T f = {at_f} has a positive entry"));
    }
    let bf = p.eq_rhs().dot(farkas);
    if !bf.is_positive() {
        return Err(format!("b^T f = {bf} is not positive"));
    }
    Ok(())
}

pub fn check_unbounded(p: &LinearProgram, x0: &QVector, ray: &QVector) -> Result<(), String> {
    let a = p.eq_matrix();
    if x0.dim() != p.num_vars() || ray.dim() != p.num_vars() {
        return Err("ray certificate has the wrong shape".into());
    }
    if !x0.is_nonnegative() || &a.mul_vec(x0).map_err(|e| e.to_string())? != p.eq_rhs() {
        return Err(format!("x0 = {x0} is not feasible"));
    }
    if !ray.is_nonnegative() || !a.mul_vec(ray).map_err(|e| e.to_string())?.is_zero() {
        return Err(format!("ray = {ray} is not a recession direction"));
    }
    let slope = p.objective().dot(ray);
    if !slope.is_negative() {
        return Err(format!("c^T ray = {slope} is not negative"));
    }
    Ok(())
}

pub fn check_outcome(p: &LinearProgram, outcome: &LpOutcome) -> Result<(), String> {
    match outcome {
        LpOutcome::Optimal { x, y, value } => check_optimal(p, x, y, value),
        LpOutcome::Infeasible { farkas } => check_farkas(p, farkas),
        LpOutcome::Unbounded { x0, ray } => check_unbounded(p, x0, ray),
    }
}

/// `true` iff `x` is feasible for `p`.
pub fn is_feasible(p: &LinearProgram, x: &QVector) -> bool {
    x.dim() == p.num_vars()
        && x.is_nonnegative()
        && p.eq_matrix().mul_vec(x).map(|ax| &ax == p.eq_rhs()).unwrap_or(false)
}

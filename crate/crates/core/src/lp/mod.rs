//! Exact two-phase simplex over the rationals.
//!
//! Programs are in equality form `min c^T x  s.t.  A x = b, x >= 0`. Every
//! outcome carries a certificate: optimal points come with dual multipliers
//! satisfying `c^T x = b^T y` exactly, infeasible programs with a Farkas
//! vector, unbounded programs with a ray.
//!
//! Pivoting always uses Bland's rule, so termination does not depend on
//! degeneracy.

mod general;
pub mod verify;

pub use general::{
    solve_feasibility, solve_general, to_standard_form, BackMap, Feasibility, GeneralConstraint, GeneralLp,
    GeneralOutcome, Relation, StandardForm, VarDomain,
};

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exact::{QMatrix, QVector, Rational};

/// `min objective^T x  s.t.  eq_matrix · x = eq_rhs, x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    objective: QVector,
    eq_matrix: QMatrix,
    eq_rhs: QVector,
}

impl LinearProgram {
    pub fn new(objective: QVector, eq_matrix: QMatrix, eq_rhs: QVector) -> Result<Self> {
        objective.check_dim(eq_matrix.cols(), "objective")?;
        eq_rhs.check_dim(eq_matrix.rows(), "right-hand side")?;
        Ok(LinearProgram {
            objective,
            eq_matrix,
            eq_rhs,
        })
    }

    pub fn objective(&self) -> &QVector {
        &self.objective
    }

    pub fn eq_matrix(&self) -> &QMatrix {
        &self.eq_matrix
    }

    pub fn eq_rhs(&self) -> &QVector {
        &self.eq_rhs
    }

    pub fn num_vars(&self) -> usize {
        self.eq_matrix.cols()
    }

    pub fn num_rows(&self) -> usize {
        self.eq_matrix.rows()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// `y` holds one multiplier per equality row.
    Optimal { x: QVector, y: QVector, value: Rational },
    /// `A^T farkas <= 0` and `b^T farkas > 0`.
    Infeasible { farkas: QVector },
    /// `x0` is feasible; `A ray = 0`, `ray >= 0`, `c^T ray < 0`.
    Unbounded { x0: QVector, ray: QVector },
}

impl LpOutcome {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    pub fn optimal_value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

struct Tableau {
    /// Structural columns; artificial columns follow at `n..n + m`.
    n: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

enum Phase {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn width(&self) -> usize {
        self.n + self.rows.len()
    }

    fn reduced_costs(&self, costs: &[Rational]) -> Vec<Rational> {
        let mut d = costs.to_vec();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (dj, tij) in d.iter_mut().zip(row) {
                if !tij.is_zero() {
                    *dj = &*dj - cb * tij;
                }
            }
        }
        d
    }

    /// `c_B^T B^{-1}`, read off the artificial columns.
    fn simplex_multipliers(&self, costs: &[Rational]) -> QVector {
        let m = self.rows.len();
        (0..m)
            .map(|k| {
                self.rows
                    .iter()
                    .zip(&self.basis)
                    .fold(Rational::zero(), |acc, (row, &b)| acc + &costs[b] * &row[self.n + k])
            })
            .collect()
    }

    /// Pivots on `(r, col)`, also eliminating `col` from `costs` if given.
    fn pivot(&mut self, r: usize, col: usize, costs: Option<&mut [Rational]>) {
        let inv = self.rows[r][col].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        if let Some(d) = costs {
            let factor = d[col].clone();
            if !factor.is_zero() {
                for (dj, p) in d.iter_mut().zip(&self.rows[r]) {
                    if !p.is_zero() {
                        *dj -= &factor * p;
                    }
                }
            }
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][col].is_zero() {
                continue;
            }
            let factor = self.rows[i][col].clone();
            let (pivot_row, row) = if i < r {
                let (lo, hi) = self.rows.split_at_mut(r);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = self.rows.split_at_mut(i);
                (&lo[r], &mut hi[0])
            };
            for (x, p) in row.iter_mut().zip(pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &factor * p;
                }
            }
            self.rhs[i] = &self.rhs[i] - &factor * &self.rhs[r];
        }
        self.basis[r] = col;
    }

    /// Bland's rule: lowest-index improving column enters; ratio ties leave
    /// by lowest basic index.
    fn run(&mut self, costs: &[Rational], allowed: usize) -> Phase {
        let mut d = self.reduced_costs(costs);
        loop {
            let Some(entering) = (0..allowed).find(|&j| d[j].is_negative()) else {
                return Phase::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][entering];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, entering, Some(&mut d)),
                None => return Phase::Unbounded(entering),
            }
        }
    }

    fn basic_solution(&self) -> QVector {
        let mut x = QVector::zeros(self.n).into_entries();
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n {
                x[b] = self.rhs[i].clone();
            }
        }
        x.into()
    }
}

/// Solves `p` exactly. Deterministic for a fixed input.
pub fn solve_lp(p: &LinearProgram) -> LpOutcome {
    let (m, n) = (p.num_rows(), p.num_vars());
    // Row signs make the phase-one right-hand side nonnegative.
    let signs: Vec<Rational> = p
        .eq_rhs
        .iter()
        .map(|b| {
            if b.is_negative() {
                -Rational::one()
            } else {
                Rational::one()
            }
        })
        .collect();
    let rows = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = p.eq_matrix.row(i).iter().map(|a| a * &signs[i]).collect();
            row.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let mut t = Tableau {
        n,
        rows,
        rhs: p.eq_rhs.iter().zip(&signs).map(|(b, s)| b * s).collect(),
        basis: (n..n + m).collect(),
    };

    let phase_one: Vec<Rational> = (0..t.width())
        .map(|j| if j < n { Rational::zero() } else { Rational::one() })
        .collect();
    // Phase one is bounded below by zero, so it always ends optimal.
    let _ = t.run(&phase_one, t.width());
    let infeasibility = t
        .basis
        .iter()
        .zip(&t.rhs)
        .fold(Rational::zero(), |acc, (&b, r)| acc + &phase_one[b] * r);
    if infeasibility.is_positive() {
        let y = t.simplex_multipliers(&phase_one);
        let farkas = y.iter().zip(&signs).map(|(yi, s)| yi * s).collect();
        return LpOutcome::Infeasible { farkas };
    }

    // Drive zero-level artificials out of the basis; rows that stay are redundant.
    for r in 0..m {
        if t.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, col, None);
            }
        }
    }

    let phase_two: Vec<Rational> = (0..t.width())
        .map(|j| {
            if j < n {
                p.objective[j].clone()
            } else {
                Rational::zero()
            }
        })
        .collect();
    match t.run(&phase_two, n) {
        Phase::Optimal => {
            let x = t.basic_solution();
            let value = p.objective.dot(&x);
            let y = t
                .simplex_multipliers(&phase_two)
                .iter()
                .zip(&signs)
                .map(|(yi, s)| yi * s)
                .collect();
            LpOutcome::Optimal { x, y, value }
        }
        Phase::Unbounded(entering) => {
            let x0 = t.basic_solution();
            let mut ray = QVector::zeros(n).into_entries();
            ray[entering] = Rational::one();
            for (i, &b) in t.basis.iter().enumerate() {
                if b < n {
                    ray[b] = -t.rows[i][entering].clone();
                }
            }
            LpOutcome::Unbounded { x0, ray: ray.into() }
        }
    }
}

/// Convenience: maximize `objective^T x` over `{x >= 0 : A x = b}`.
/// Returns the outcome of the equivalent minimization of `-objective`.
pub fn maximize(objective: &QVector, a: &QMatrix, b: &QVector) -> Result<LpOutcome> {
    let lp = LinearProgram::new(-objective, a.clone(), b.clone())?;
    Ok(solve_lp(&lp))
}

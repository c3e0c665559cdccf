//! Programs with free or shifted variables and mixed `<=`/`>=`/`=` rows,
//! reduced to equality form for the simplex core.

use num_traits::{One, Zero};

use super::{solve_lp, LinearProgram, LpOutcome};
use crate::error::{Error, Result};
use crate::exact::{QMatrix, QVector, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarDomain {
    NonNegative,
    Free,
    AtLeast(Rational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralConstraint {
    pub coeffs: QVector,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `min objective^T x` over the constraint rows and variable domains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralLp {
    domains: Vec<VarDomain>,
    objective: QVector,
    constraints: Vec<GeneralConstraint>,
}

impl GeneralLp {
    pub fn new(domains: Vec<VarDomain>) -> Self {
        let n = domains.len();
        GeneralLp {
            domains,
            objective: QVector::zeros(n),
            constraints: Vec::new(),
        }
    }

    /// `count` free variables.
    pub fn free(count: usize) -> Self {
        Self::new(vec![VarDomain::Free; count])
    }

    pub fn num_vars(&self) -> usize {
        self.domains.len()
    }

    pub fn constraints(&self) -> &[GeneralConstraint] {
        &self.constraints
    }

    pub fn domains(&self) -> &[VarDomain] {
        &self.domains
    }

    pub fn set_objective(&mut self, objective: QVector) -> Result<()> {
        objective.check_dim(self.num_vars(), "objective")?;
        self.objective = objective;
        Ok(())
    }

    pub fn add_constraint(&mut self, coeffs: QVector, relation: Relation, rhs: Rational) -> Result<()> {
        coeffs.check_dim(self.num_vars(), "constraint row")?;
        self.constraints.push(GeneralConstraint { coeffs, relation, rhs });
        Ok(())
    }

    /// `true` iff `x` satisfies every domain and row exactly.
    pub fn satisfied_by(&self, x: &QVector) -> bool {
        if x.dim() != self.num_vars() {
            return false;
        }
        let domains_ok = self.domains.iter().zip(x).all(|(d, xi)| match d {
            VarDomain::NonNegative => !num_traits::Signed::is_negative(xi),
            VarDomain::Free => true,
            VarDomain::AtLeast(l) => xi >= l,
        });
        domains_ok
            && self.constraints.iter().all(|c| {
                let lhs = c.coeffs.dot(x);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    /// Any feasible point, or `None`.
    pub fn feasible_point(&self) -> Result<Option<QVector>> {
        let mut probe = self.clone();
        probe.objective = QVector::zeros(self.num_vars());
        Ok(match solve_general(&probe)? {
            GeneralOutcome::Optimal { x, .. } => Some(x),
            GeneralOutcome::Infeasible { .. } => None,
            GeneralOutcome::Unbounded { .. } => unreachable!("zero objective cannot be unbounded"),
        })
    }
}

/// Where each general variable lives in the standard form:
/// `x_j = std[plus] - std[minus] + shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackMap {
    columns: Vec<(usize, Option<usize>, Rational)>,
    objective_offset: Rational,
}

impl BackMap {
    pub fn point(&self, standard: &QVector) -> QVector {
        self.columns
            .iter()
            .map(|(plus, minus, shift)| {
                let mut v = &standard[*plus] + shift;
                if let Some(mi) = minus {
                    v -= &standard[*mi];
                }
                v
            })
            .collect()
    }

    pub fn direction(&self, standard: &QVector) -> QVector {
        self.columns
            .iter()
            .map(|(plus, minus, _)| match minus {
                Some(mi) => &standard[*plus] - &standard[*mi],
                None => standard[*plus].clone(),
            })
            .collect()
    }

    /// Added to a standard-form objective value to get the general one.
    pub fn objective_offset(&self) -> &Rational {
        &self.objective_offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub program: LinearProgram,
    pub back: BackMap,
}

pub fn to_standard_form(general: &GeneralLp) -> StandardForm {
    let mut columns = Vec::with_capacity(general.num_vars());
    let mut next = 0;
    for d in &general.domains {
        let entry = match d {
            VarDomain::NonNegative => (next, None, Rational::zero()),
            VarDomain::Free => {
                next += 1;
                (next - 1, Some(next), Rational::zero())
            }
            VarDomain::AtLeast(l) => (next, None, l.clone()),
        };
        next += 1;
        columns.push(entry);
    }
    let structural = next;
    let slack_count = general
        .constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let width = structural + slack_count;
    let rows = general.constraints.len();

    let mut matrix = QMatrix::zeros(rows, width);
    let mut rhs = Vec::with_capacity(rows);
    let mut slack = structural;
    for (i, c) in general.constraints.iter().enumerate() {
        let mut b = c.rhs.clone();
        for (j, a) in c.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (plus, minus, shift) = &columns[j];
            matrix.set(i, *plus, a.clone());
            if let Some(mi) = minus {
                matrix.set(i, *mi, -a);
            }
            b -= a * shift;
        }
        match c.relation {
            Relation::Le => {
                matrix.set(i, slack, Rational::one());
                slack += 1;
            }
            Relation::Ge => {
                matrix.set(i, slack, -Rational::one());
                slack += 1;
            }
            Relation::Eq => {}
        }
        rhs.push(b);
    }

    let mut objective = QVector::zeros(width).into_entries();
    let mut offset = Rational::zero();
    for (j, c) in general.objective.iter().enumerate() {
        let (plus, minus, shift) = &columns[j];
        objective[*plus] = c.clone();
        if let Some(mi) = minus {
            objective[*mi] = -c;
        }
        offset += c * shift;
    }

    let program = LinearProgram::new(objective.into(), matrix, rhs.into())
        .expect("standard form dimensions are consistent by construction");
    StandardForm {
        program,
        back: BackMap {
            columns,
            objective_offset: offset,
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneralOutcome {
    /// `multipliers` has one entry per constraint row.
    Optimal {
        x: QVector,
        value: Rational,
        multipliers: QVector,
    },
    /// Farkas vector of the standard form, one entry per constraint row.
    Infeasible {
        farkas: QVector,
    },
    Unbounded {
        x0: QVector,
        ray: QVector,
    },
}

pub fn solve_general(general: &GeneralLp) -> Result<GeneralOutcome> {
    let std = to_standard_form(general);
    Ok(match solve_lp(&std.program) {
        LpOutcome::Optimal { x, y, value } => GeneralOutcome::Optimal {
            x: std.back.point(&x),
            value: value + std.back.objective_offset(),
            multipliers: y,
        },
        LpOutcome::Infeasible { farkas } => GeneralOutcome::Infeasible { farkas },
        LpOutcome::Unbounded { x0, ray } => GeneralOutcome::Unbounded {
            x0: std.back.point(&x0),
            ray: std.back.direction(&ray),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(QVector),
    Infeasible { farkas: QVector },
}

/// Finds `x >= 0` with `A x = b` and `row^T x >= bound` for each extra row.
pub fn solve_feasibility(a: &QMatrix, b: &QVector, extra_lower_bounds: &[(QVector, Rational)]) -> Result<Feasibility> {
    b.check_dim(a.rows(), "right-hand side")?;
    let mut g = GeneralLp::new(vec![VarDomain::NonNegative; a.cols()]);
    for i in 0..a.rows() {
        g.add_constraint(a.row(i), Relation::Eq, b[i].clone())?;
    }
    for (row, bound) in extra_lower_bounds {
        g.add_constraint(row.clone(), Relation::Ge, bound.clone())
            .map_err(|_| Error::dims("extra bound row does not match the variable count"))?;
    }
    Ok(match solve_general(&g)? {
        GeneralOutcome::Optimal { x, .. } => Feasibility::Feasible(x),
        GeneralOutcome::Infeasible { farkas } => Feasibility::Infeasible { farkas },
        GeneralOutcome::Unbounded { .. } => unreachable!("zero objective cannot be unbounded"),
    })
}

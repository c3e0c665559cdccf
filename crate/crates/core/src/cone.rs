//! Polyhedral ordering cones given by finitely many generators.
//!
//! A cone `K = cone{g_1, ..., g_p}` orders `R^k` by `v <=_K w` iff `w - v ∈ K`.
//! Every constructed [`OrderingCone`] is validated as pointed and nontrivial.
//! Strict conditions `λ^T g_i > 0` are expressed as `λ^T g_i >= 1`, which is
//! equivalent for all the positively homogeneous systems used here.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::int;
use crate::exact::{QMatrix, QVector, Rational};
use crate::lp::{solve_lp, GeneralLp, LinearProgram, LpOutcome, Relation};

#[derive(Clone, Debug, Eq)]
pub struct OrderingCone {
    dim: usize,
    generators: Vec<QVector>,
    /// Some `λ` with `λ^T g_i >= 1` for every generator.
    witness: QVector,
}

impl PartialEq for OrderingCone {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.generators == other.generators
    }
}

/// Outcome of comparing two vectors under a cone order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    Equal,
    /// `v <=_K w` and `v != w`.
    Below,
    /// `w <=_K v` and `v != w`.
    Above,
    Incomparable,
}

/// `γ` with `γ^T g <= -1` on cone generators and `γ^T m >= 0` on the
/// separated set's points and rays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationCertificate {
    pub gamma: QVector,
}

/// Builds and validates `cone{generators}` in `R^dim`.
pub fn validate_cone(dim: usize, generators: Vec<QVector>) -> Result<OrderingCone> {
    OrderingCone::new(dim, generators)
}

impl OrderingCone {
    /// Zero generators are dropped. Fails with [`Error::TrivialCone`] when
    /// nothing remains and [`Error::NotPointed`] when the cone contains a line.
    pub fn new(dim: usize, generators: Vec<QVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::dims("cone dimension must be at least 1"));
        }
        for (i, g) in generators.iter().enumerate() {
            g.check_dim(dim, &format!("cone generator {i}"))?;
        }
        let generators: Vec<QVector> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.is_empty() {
            return Err(Error::TrivialCone);
        }
        let mut system = GeneralLp::free(dim);
        for g in &generators {
            system.add_constraint(g.clone(), Relation::Ge, int(1))?;
        }
        let witness = system.feasible_point()?.ok_or(Error::NotPointed)?;
        Ok(OrderingCone {
            dim,
            generators,
            witness,
        })
    }

    /// The nonnegative orthant `R^dim_+`.
    pub fn orthant(dim: usize) -> Self {
        assert!(dim > 0, "orthant dimension must be at least 1");
        OrderingCone {
            dim,
            generators: (0..dim).map(|i| QVector::unit(dim, i)).collect(),
            witness: QVector::new(vec![int(1); dim]),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[QVector] {
        &self.generators
    }

    /// `k x p` matrix whose columns are the generators.
    pub fn generator_matrix(&self) -> QMatrix {
        QMatrix::from_columns(&self.generators, self.dim).expect("generators have the cone dimension")
    }

    /// A point `λ` with `λ^T g_i >= 1` for all generators, so `λ ∈ K^{*0}`.
    pub fn find_quasi_interior_point(&self) -> &QVector {
        &self.witness
    }

    /// `-K`, which orders by the reverse relation.
    pub fn negated(&self) -> Self {
        OrderingCone {
            dim: self.dim,
            generators: self.generators.iter().map(|g| -g).collect(),
            witness: -&self.witness,
        }
    }

    /// Generators are exactly `e_1, ..., e_k` in order.
    fn has_unit_generators(&self) -> bool {
        self.generators.len() == self.dim
            && self.generators.iter().enumerate().all(|(i, g)| {
                g.iter()
                    .enumerate()
                    .all(|(j, x)| if i == j { x == &int(1) } else { x.is_zero() })
            })
    }

    /// `true` iff `K = R^k_+` as a set.
    pub fn is_orthant(&self) -> bool {
        self.generators.iter().all(QVector::is_nonnegative)
            && (0..self.dim).all(|i| self.contains(&QVector::unit(self.dim, i)).unwrap_or(false))
    }

    /// Nonnegative generator weights `μ` with `G μ = v`, if any.
    pub fn coefficients(&self, v: &QVector) -> Result<Option<QVector>> {
        v.check_dim(self.dim, "vector")?;
        if self.has_unit_generators() {
            return Ok(v.is_nonnegative().then(|| v.clone()));
        }
        let lp = LinearProgram::new(
            QVector::zeros(self.generators.len()),
            self.generator_matrix(),
            v.clone(),
        )?;
        Ok(match solve_lp(&lp) {
            LpOutcome::Optimal { x, .. } => Some(x),
            _ => None,
        })
    }

    pub fn contains(&self, v: &QVector) -> Result<bool> {
        if v.dim() == self.dim && v.is_zero() {
            return Ok(true);
        }
        Ok(self.coefficients(v)?.is_some())
    }

    fn products(&self, lambda: &QVector) -> Result<impl Iterator<Item = Rational> + '_> {
        lambda.check_dim(self.dim, "dual vector")?;
        let lambda = lambda.clone();
        Ok(self.generators.iter().map(move |g| lambda.dot(g)))
    }

    /// `λ ∈ K*`.
    pub fn in_dual(&self, lambda: &QVector) -> Result<bool> {
        Ok(self.products(lambda)?.all(|p| !p.is_negative()))
    }

    /// `λ ∈ K^{*0}`: strictly positive on every nonzero cone member.
    pub fn in_quasi_interior(&self, lambda: &QVector) -> Result<bool> {
        Ok(self.products(lambda)?.all(|p| p.is_positive()))
    }

    /// `g / (λ^T g)` for the first generator with `λ^T g > 0`. The result
    /// lies in `K \ {0}` and has inner product one with `λ`.
    pub fn normalized_generator(&self, lambda: &QVector) -> Result<Option<QVector>> {
        lambda.check_dim(self.dim, "dual vector")?;
        Ok(self.generators.iter().find_map(|g| {
            let p = lambda.dot(g);
            p.is_positive().then(|| g.scale(&p.recip()))
        }))
    }

    pub fn compare(&self, v: &QVector, w: &QVector) -> Result<Comparison> {
        v.check_dim(self.dim, "left operand")?;
        w.check_dim(self.dim, "right operand")?;
        if v == w {
            return Ok(Comparison::Equal);
        }
        if self.contains(&(w - v))? {
            return Ok(Comparison::Below);
        }
        if self.contains(&(v - w))? {
            return Ok(Comparison::Above);
        }
        Ok(Comparison::Incomparable)
    }

    /// `true` iff `v <=_K w` and `v != w`.
    pub fn strictly_below(&self, v: &QVector, w: &QVector) -> Result<bool> {
        Ok(self.compare(v, w)? == Comparison::Below)
    }

    /// Minimal elements of a finite list. Equal vectors at different
    /// positions count as one value, so all copies of a minimal value stay.
    pub fn min_elements(&self, points: &[QVector]) -> Result<Vec<QVector>> {
        for (i, p) in points.iter().enumerate() {
            p.check_dim(self.dim, &format!("point {i}"))?;
        }
        let mut kept = Vec::new();
        'outer: for p in points {
            for q in points {
                if q != p && self.contains(&(p - q))? {
                    continue 'outer;
                }
            }
            kept.push(p.clone());
        }
        Ok(kept)
    }

    /// Maximal elements, i.e. minimal elements under `-K`.
    pub fn max_elements(&self, points: &[QVector]) -> Result<Vec<QVector>> {
        self.negated().min_elements(points)
    }

    /// Separates `M = conv(points) + cone(rays)` from `K` when `M ∩ K = {0}`.
    pub fn separate_from(&self, points: &[QVector], rays: &[QVector]) -> Result<Option<SeparationCertificate>> {
        let mut system = GeneralLp::free(self.dim);
        for g in &self.generators {
            system.add_constraint(g.clone(), Relation::Le, int(-1))?;
        }
        for (i, m) in points.iter().chain(rays).enumerate() {
            m.check_dim(self.dim, &format!("separated element {i}"))?;
            system.add_constraint(m.clone(), Relation::Ge, Rational::zero())?;
        }
        Ok(system.feasible_point()?.map(|gamma| SeparationCertificate { gamma }))
    }
}

/// JSON form: `{"orthant": k}` or `{"dim": k, "generators": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum ConeSpec {
    Orthant { orthant: usize },
    Generators { dim: usize, generators: Vec<QVector> },
}

impl ConeSpec {
    pub fn build(&self) -> Result<OrderingCone> {
        match self {
            ConeSpec::Orthant { orthant } => {
                if *orthant == 0 {
                    Err(Error::dims("orthant dimension must be at least 1"))
                } else {
                    Ok(OrderingCone::orthant(*orthant))
                }
            }
            ConeSpec::Generators { dim, generators } => OrderingCone::new(*dim, generators.clone()),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ConeSpec::Orthant { orthant } => *orthant,
            ConeSpec::Generators { dim, .. } => *dim,
        }
    }
}

impl From<&OrderingCone> for ConeSpec {
    fn from(cone: &OrderingCone) -> Self {
        if *cone == OrderingCone::orthant(cone.dim) {
            ConeSpec::Orthant { orthant: cone.dim }
        } else {
            ConeSpec::Generators {
                dim: cone.dim,
                generators: cone.generators.clone(),
            }
        }
    }
}

impl Serialize for OrderingCone {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ConeSpec::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OrderingCone {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        ConeSpec::deserialize(deserializer)?
            .build()
            .map_err(serde::de::Error::custom)
    }
}

//! Seeded generators for random problem instances and dual feasible points.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::Rng;

use crate::cone::OrderingCone;
use crate::error::Result;
use crate::exact::solve_linear_system;
use crate::exact::{frac, int, QMatrix, QVector, Rational};
use crate::lp::{solve_general, GeneralLp, GeneralOutcome, Relation};
use crate::model::{DualCandidateD, VlpProblem};

/// Numerator in `[-9, 9]` over a denominator in `{1, 2, 3}`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=3))
}

fn nonnegative_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    frac(rng.gen_range(0..=9), rng.gen_range(1..=3))
}

pub fn small_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> QVector {
    (0..dim).map(|_| small_rational(rng)).collect()
}

pub fn small_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> QMatrix {
    let rows_v: Vec<QVector> = (0..rows).map(|_| small_vector(rng, cols)).collect();
    QMatrix::from_rows(rows_v, cols).expect("rows have the requested width")
}

/// Orthant half the time, otherwise a pointed cone on 2 to 4 random
/// generators. Falls back to the orthant if sampling keeps failing.
pub fn random_cone<R: Rng + ?Sized>(rng: &mut R, k: usize) -> OrderingCone {
    if rng.gen_bool(0.5) {
        return OrderingCone::orthant(k);
    }
    for _ in 0..32 {
        let count = rng.gen_range(2..=4);
        let gens = (0..count).map(|_| small_vector(rng, k)).collect();
        if let Ok(cone) = OrderingCone::new(k, gens) {
            return cone;
        }
    }
    OrderingCone::orthant(k)
}

/// `n <= 6`, `m <= 3`, `k ∈ {2, 3}`. The right-hand side is `A x0` for a
/// random `x0 >= 0` most of the time, so both feasible and infeasible
/// instances occur, along with the homogeneous case `b = 0`.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R) -> VlpProblem {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(1..=3);
    let k = rng.gen_range(2..=3);
    let l = small_matrix(rng, k, n);
    let a = small_matrix(rng, m, n);
    let roll: f64 = rng.gen();
    let b = if roll < 0.6 {
        let x0: QVector = (0..n)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    int(0)
                } else {
                    nonnegative_rational(rng)
                }
            })
            .collect();
        a.mul_vec(&x0).expect("x0 has n entries")
    } else if roll < 0.85 {
        small_vector(rng, m)
    } else {
        QVector::zeros(m)
    };
    let cone = random_cone(rng, k);
    VlpProblem::new(l, a, b, cone).expect("generated dimensions are consistent")
}

fn integer_combination<R: Rng + ?Sized>(rng: &mut R, points: &[QVector]) -> QVector {
    let mut weights: Vec<i64> = (0..points.len()).map(|_| rng.gen_range(0..=2)).collect();
    if weights.iter().all(|&w| w == 0) {
        weights[rng.gen_range(0..points.len())] = 1;
    }
    let mut acc = QVector::zeros(points[0].dim());
    for (p, &w) in points.iter().zip(&weights) {
        if w > 0 {
            acc = &acc + &p.scale(&int(w));
        }
    }
    acc
}

/// Random point of the convex hull of `points` with weights in `{0, ..., 4}`.
pub fn convex_combination<R: Rng + ?Sized>(rng: &mut R, points: &[QVector]) -> QVector {
    assert!(!points.is_empty(), "convex combination of no points");
    let mut weights: Vec<u32> = (0..points.len()).map(|_| rng.gen_range(0..=4)).collect();
    if weights.iter().all(|&w| w == 0) {
        weights[rng.gen_range(0..points.len())] = 1;
    }
    let total: u32 = weights.iter().sum();
    let dim = points[0].dim();
    let mut acc = QVector::zeros(dim);
    for (p, &w) in points.iter().zip(&weights) {
        if w > 0 {
            acc = &acc + &p.scale(&frac(w as i64, total as i64));
        }
    }
    acc
}

/// Integer points of `{(λ, z) : λ^T g_i >= 1, L^T λ - A^T z >= 0}`: vertices
/// of the system cut by a box of radius 5 around one feasible point, each
/// scaled to clear denominators. Empty iff the system is infeasible.
fn lambda_z_anchors<R: Rng + ?Sized>(p: &VlpProblem, rng: &mut R, count: usize) -> Result<Vec<QVector>> {
    let (k, m) = (p.k(), p.m());
    let mut system = GeneralLp::free(k + m);
    for g in p.cone().generators() {
        system.add_constraint(g.concat(&QVector::zeros(m)), Relation::Ge, int(1))?;
    }
    for j in 0..p.n() {
        system.add_constraint(p.l().col(j).concat(&-&p.a().col(j)), Relation::Ge, int(0))?;
    }
    let Some(center) = system.feasible_point()? else {
        return Ok(Vec::new());
    };
    for i in 0..k + m {
        let e = QVector::unit(k + m, i);
        system.add_constraint(e.clone(), Relation::Le, &center[i] + int(5))?;
        system.add_constraint(e, Relation::Ge, &center[i] - int(5))?;
    }
    let mut anchors = vec![clear_denominators(&center)];
    for _ in 0..count {
        system.set_objective(small_vector(rng, k + m))?;
        if let GeneralOutcome::Optimal { x, .. } = solve_general(&system)? {
            let x = clear_denominators(&x);
            if !anchors.contains(&x) {
                anchors.push(x);
            }
        }
    }
    Ok(anchors)
}

/// `v` scaled by the least common multiple of its denominators.
pub fn clear_denominators(v: &QVector) -> QVector {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
    v.scale(&Rational::from_integer(l))
}

/// Random element of `{w : λ^T w = 0}`.
fn orthogonal_to<R: Rng + ?Sized>(rng: &mut R, lambda: &QVector) -> Result<QVector> {
    let row = QMatrix::from_rows(vec![lambda.clone()], lambda.dim())?;
    let basis = solve_linear_system(&row, &QVector::zeros(1))?
        .map(|s| s.nullspace)
        .unwrap_or_default();
    let mut w = QVector::zeros(lambda.dim());
    for v in &basis {
        w = &w + &clear_denominators(v).scale(&int(rng.gen_range(-3..=3)));
    }
    Ok(w)
}

/// Up to `count` points of `B`, or none when `B` is empty. Each is built from
/// `(λ, z)` in the linearized dual system as `U = λ̃ z^T + w u^T` and
/// `v ⊥ λ`, with `λ^T w = 0` and `λ^T λ̃ = 1`. The system is a cone cut by
/// `λ^T g_i >= 1`, so nonnegative integer combinations of anchors with some
/// weight at least one stay feasible.
pub fn sample_dual_points<R: Rng + ?Sized>(p: &VlpProblem, rng: &mut R, count: usize) -> Result<Vec<DualCandidateD>> {
    let anchors = lambda_z_anchors(p, rng, 4)?;
    if anchors.is_empty() {
        return Ok(Vec::new());
    }
    let k = p.k();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let point = integer_combination(rng, &anchors);
        let lambda = point.slice(0, k);
        let z = point.slice(k, point.dim());
        let tilde = p
            .cone()
            .normalized_generator(&lambda)?
            .expect("anchor λ satisfies λ^T g >= 1");
        let mut u = QMatrix::outer(&tilde, &z);
        if rng.gen_bool(0.7) {
            let w = orthogonal_to(rng, &lambda)?;
            u = u.add_mat(&QMatrix::outer(&w, &small_vector(rng, p.m())))?;
        }
        let v = if rng.gen_bool(0.7) {
            orthogonal_to(rng, &lambda)?
        } else {
            QVector::zeros(k)
        };
        out.push(DualCandidateD { lambda, u, v });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::check_feasible_d;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn instances_are_deterministic_per_seed() {
        let a = random_instance(&mut ChaCha8Rng::seed_from_u64(7));
        let b = random_instance(&mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
    }

    #[test]
    fn sampled_dual_points_are_feasible() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut nonempty = 0;
        for _ in 0..25 {
            let p = random_instance(&mut rng);
            let points = sample_dual_points(&p, &mut rng, 5).unwrap();
            if !points.is_empty() {
                nonempty += 1;
            }
            for c in points {
                assert!(check_feasible_d(&p, &c).unwrap(), "{c:?}");
            }
        }
        assert!(nonempty > 0);
    }

    #[test]
    fn convex_combination_stays_in_segment() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pts = [QVector::from_ints(&[0, 0]), QVector::from_ints(&[2, 2])];
        for _ in 0..20 {
            let c = convex_combination(&mut rng, &pts);
            assert_eq!(c[0], c[1]);
            assert!(c[0] >= int(0) && c[0] <= int(2));
        }
    }
}

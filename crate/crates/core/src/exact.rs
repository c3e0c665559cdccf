//! Exact rational scalars, vectors and dense matrices.
//!
//! Every quantity in the workbench is a [`Rational`] backed by arbitrary
//! precision integers, so identities such as `c^T x = b^T y` hold bit-exactly.
//! Rationals serialize as strings `"p/q"` or `"p"`; integer JSON numbers are
//! also accepted on input, decimal floats never are.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use crate::rational::Rational;

/// Builds the canonical form of `num / den`.
pub fn rat_normalize(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num.into(), den))
}

/// Integer as a rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `num / den` for literal constants. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    rat_normalize(num, den).expect("literal fraction with zero denominator")
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let invalid = || Error::InvalidRational(text.to_string());
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let valid_digits = |s: &str, allow_sign: bool| {
        let digits = if allow_sign {
            s.strip_prefix('-').unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_digits(num, true) || !valid_digits(den, false) {
        return Err(invalid());
    }
    let num: BigInt = num.parse().map_err(|_| invalid())?;
    let den: BigInt = den.parse().map_err(|_| invalid())?;
    rat_normalize(num, den)
}

fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(&r.denom()))
}

/// Column vector of rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        QVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        QVector(vec![Rational::zero(); dim])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        QVector(values.iter().map(|&v| int(v)).collect())
    }

    /// Unit vector `e_index` of length `dim`.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[index] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, factor: &Rational) -> QVector {
        QVector(self.0.iter().map(|x| x * factor).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(Signed::is_positive)
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn slice(&self, start: usize, end: usize) -> QVector {
        QVector(self.0[start..end].to_vec())
    }

    pub fn check_dim(&self, expected: usize, what: &str) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(Error::dims(format!(
                "{what} has dimension {}, expected {expected}",
                self.dim()
            )))
        }
    }
}

impl From<Vec<Rational>> for QVector {
    fn from(entries: Vec<Rational>) -> Self {
        QVector(entries)
    }
}

impl FromIterator<Rational> for QVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        QVector(iter.into_iter().collect())
    }
}

impl Index<usize> for QVector {
    type Output = Rational;

    fn index(&self, index: usize) -> &Rational {
        &self.0[index]
    }
}

impl<'a> IntoIterator for &'a QVector {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Add for &QVector {
    type Output = QVector;

    fn add(self, rhs: &QVector) -> QVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect()
    }
}

impl Sub for &QVector {
    type Output = QVector;

    fn sub(self, rhs: &QVector) -> QVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect()
    }
}

impl Neg for &QVector {
    type Output = QVector;

    fn neg(self) -> QVector {
        self.0.iter().map(|a| -a).collect()
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dims(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(QMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds from explicit rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(rows: Vec<QVector>, cols: usize) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.dim() != cols {
                return Err(Error::dims(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.dim()
                )));
            }
            data.extend(row.into_entries());
        }
        Ok(QMatrix {
            rows: n_rows,
            cols,
            data,
        })
    }

    pub fn from_columns(columns: &[QVector], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            col.check_dim(rows, &format!("column {j}"))?;
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    /// Integer literal rows. Panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| QVector::from_ints(r)).collect(), cols)
            .expect("ragged integer matrix literal")
    }

    /// Outer product `u v^T`.
    pub fn outer(u: &QVector, v: &QVector) -> Self {
        let mut data = Vec::with_capacity(u.dim() * v.dim());
        for a in u {
            for b in v {
                data.push(a * b);
            }
        }
        QMatrix {
            rows: u.dim(),
            cols: v.dim(),
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> QVector {
        QVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> QVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<QVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_mat(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::dims(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = &out.data[idx] + a * other.get(l, j);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &QVector) -> Result<QVector> {
        if self.cols != v.dim() {
            return Err(Error::dims(format!(
                "cannot multiply {}x{} matrix by vector of dimension {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// `self^T v` without materializing the transpose.
    pub fn tr_mul_vec(&self, v: &QVector) -> Result<QVector> {
        if self.rows != v.dim() {
            return Err(Error::dims(format!(
                "cannot multiply transpose of {}x{} matrix by vector of dimension {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        let mut out = QVector::zeros(self.cols);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out.0[j] = &out.0[j] + self.get(i, j) * vi;
            }
        }
        Ok(out)
    }

    pub fn sub_mat(&self, other: &QMatrix) -> Result<QMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn add_mat(&self, other: &QMatrix) -> Result<QMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    fn zip_with(&self, other: &QMatrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<QMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dims(format!(
                "shapes {}x{} and {}x{} differ",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Keeps the listed columns, in order.
    pub fn select_columns(&self, columns: &[usize]) -> QMatrix {
        let mut out = Self::zeros(self.rows, columns.len());
        for i in 0..self.rows {
            for (jj, &j) in columns.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    /// Rank by fraction-free (Bareiss) elimination on the row-scaled integer
    /// matrix.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let scale = lcm_of_denominators(row);
                row.iter().map(|x| x.numer() * (&scale / x.denom())).collect()
            })
            .collect();
        let mut prev = BigInt::one();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..self.rows {
                for j in col + 1..self.cols {
                    let num = &a[r][col] * &a[i][j] - &a[i][col] * &a[r][j];
                    a[i][j] = num / &prev;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[r][col].clone();
            r += 1;
        }
        r
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        self.get(i, j)
    }
}

/// Particular solution plus a basis of the homogeneous solution space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: QVector,
    pub nullspace: Vec<QVector>,
}

/// Solves `matrix · x = rhs` exactly. `Ok(None)` means the system is
/// inconsistent.
pub fn solve_linear_system(matrix: &QMatrix, rhs: &QVector) -> Result<Option<LinearSolution>> {
    if matrix.rows() != rhs.dim() {
        return Err(Error::dims(format!(
            "matrix has {} rows but right-hand side has dimension {}",
            matrix.rows(),
            rhs.dim()
        )));
    }
    let (rows, cols) = (matrix.rows(), matrix.cols());
    // Augmented [M | rhs], reduced to row echelon form.
    let mut aug: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row = matrix.row(i).into_entries();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][col].recip();
        for x in aug[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i == r || aug[i][col].is_zero() {
                continue;
            }
            let factor = aug[i][col].clone();
            let pivot_row = aug[r].clone();
            for (x, p) in aug[i].iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
        pivots.push(col);
        r += 1;
    }
    if aug[r..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }
    let mut particular = QVector::zeros(cols);
    for (i, &pc) in pivots.iter().enumerate() {
        particular.0[pc] = aug[i][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&fc| {
            let mut n = QVector::unit(cols, fc);
            for (i, &pc) in pivots.iter().enumerate() {
                n.0[pc] = -aug[i][fc].clone();
            }
            n
        })
        .collect();
    Ok(Some(LinearSolution { particular, nullspace }))
}

fn serialize_rationals<'a, S: Serializer>(
    values: impl ExactSizeIterator<Item = &'a Rational>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}

/// Serde adapter for a single rational written as a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalText(pub Rational);

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RatVisitor;

        impl<'de> Visitor<'de> for RatVisitor {
            type Value = RationalText;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RationalText, E> {
                parse_rational(v).map(RationalText).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RationalText, E> {
                Ok(RationalText(int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RationalText, E> {
                Ok(RationalText(Rational::from_integer(BigInt::from(v))))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<RationalText, E> {
                Err(E::custom(format!(
                    "decimal number {v} is not allowed; write rationals as \"p/q\" strings"
                )))
            }
        }

        deserializer.deserialize_any(RatVisitor)
    }
}

impl Serialize for QVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_rationals(self.0.iter(), serializer)
    }
}

impl<'de> Deserialize<'de> for QVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<RationalText>::deserialize(deserializer)?;
        Ok(items.into_iter().map(|r| r.0).collect())
    }
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(&self.row(i))?;
        }
        seq.end()
    }
}

/// Matrices deserialize from a list of rows. An empty list yields a `0x0`
/// matrix; callers that know the width should re-shape it.
impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RowsVisitor;

        impl<'de> Visitor<'de> for RowsVisitor {
            type Value = QMatrix;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of equally long rows of rationals")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<QMatrix, A::Error> {
                let mut rows = Vec::new();
                while let Some(row) = seq.next_element::<QVector>()? {
                    rows.push(row);
                }
                let cols = rows.first().map_or(0, QVector::dim);
                QMatrix::from_rows(rows, cols).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_seq(RowsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(rat_normalize(2, 4).unwrap(), frac(1, 2));
        let neg = rat_normalize(3, -6).unwrap();
        assert_eq!(neg.numer(), BigInt::from(-1));
        assert_eq!(neg.denom(), BigInt::from(2));
        let zero = rat_normalize(0, 7).unwrap();
        assert_eq!(zero.numer(), BigInt::from(0));
        assert_eq!(zero.denom(), BigInt::from(1));
        assert_eq!(rat_normalize(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(frac(-1, 2).to_string(), "-1/2");
        assert_eq!(int(4).to_string(), "4");
        for bad in ["", "1/0", "1.5", "a", "--1", "1/-2", "1/"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn json_vectors_reject_floats() {
        let v: QVector = serde_json::from_str(r#"["1/2", -3, "4"]"#).unwrap();
        assert_eq!(v, QVector::new(vec![frac(1, 2), int(-3), int(4)]));
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["1/2","-3","4"]"#);
        assert!(serde_json::from_str::<QVector>("[0.5]").is_err());
    }

    #[test]
    fn transpose_and_rank() {
        let m = QMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.transpose(), QMatrix::from_int_rows(&[&[1, 3], &[2, 4]]));
        assert_eq!(QMatrix::zeros(2, 2).rank(), 0);
        assert_eq!(m.rank(), 2);
        assert_eq!(QMatrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
        assert_eq!(QMatrix::from_int_rows(&[&[0, 1, 1], &[0, 2, 2], &[1, 0, 5]]).rank(), 2);
    }

    #[test]
    fn l_minus_ua_on_two_objective_instance() {
        let l = QMatrix::from_int_rows(&[&[0], &[0]]);
        let u = QMatrix::zeros(2, 2);
        let a = QMatrix::from_int_rows(&[&[1], &[1]]);
        let diff = l.sub_mat(&u.mul_mat(&a).unwrap()).unwrap();
        assert_eq!(diff, QMatrix::from_int_rows(&[&[0], &[0]]));
    }

    #[test]
    fn multiply_checks_shapes() {
        let a = QMatrix::zeros(2, 3);
        assert!(matches!(a.mul_mat(&a), Err(Error::DimensionMismatch(_))));
        assert!(a.mul_vec(&QVector::zeros(2)).is_err());
        assert!(a.tr_mul_vec(&QVector::zeros(2)).is_ok());
    }

    #[test]
    fn linear_system_examples() {
        let sol = solve_linear_system(&QMatrix::identity(2), &QVector::from_ints(&[3, 5]))
            .unwrap()
            .unwrap();
        assert_eq!(sol.particular, QVector::from_ints(&[3, 5]));
        assert!(sol.nullspace.is_empty());

        let one_row = QMatrix::from_int_rows(&[&[1, 1]]);
        let sol = solve_linear_system(&one_row, &QVector::from_ints(&[1]))
            .unwrap()
            .unwrap();
        assert_eq!(sol.particular, QVector::from_ints(&[1, 0]));
        assert_eq!(sol.nullspace.len(), 1);
        assert!(one_row.mul_vec(&sol.nullspace[0]).unwrap().is_zero());
        assert!(!sol.nullspace[0].is_zero());

        let inconsistent = QMatrix::from_int_rows(&[&[1, 0], &[1, 0]]);
        assert_eq!(
            solve_linear_system(&inconsistent, &QVector::from_ints(&[1, 2])).unwrap(),
            None
        );
        assert!(solve_linear_system(&inconsistent, &QVector::from_ints(&[1])).is_err());
    }
}

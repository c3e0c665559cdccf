//! Exact rationals with an inline machine-word representation.
//!
//! Values whose reduced numerator and denominator fit in `i64` are stored
//! inline and combined in `i128`; anything larger falls back to
//! [`BigRational`]. The representation is canonical, so structural equality
//! and hashing agree with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Rem, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::{BigRational, ParseRatioError};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// `den > 0`, `gcd(|num|, den) = 1`, `num != i64::MIN`.
    Small(i64, i64),
    /// Never representable as `Small`.
    Big(BigRational),
}

/// Canonical rational number: positive denominator, reduced, zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        if a <= u64::MAX as u128 && b <= u64::MAX as u128 {
            let (mut x, mut y) = (a as u64, b as u64);
            while y != 0 {
                (x, y) = (y, x % y);
            }
            return x as u128;
        }
        (a, b) = (b, a % b);
    }
    a
}

fn fits(v: i128) -> bool {
    v > i64::MIN as i128 && v <= i64::MAX as i128
}

impl Rational {
    /// `num / den` reduced; `den != 0`, and `|num|, |den| < 2^127`.
    fn from_i128(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd_u128(num.unsigned_abs(), den as u128) as i128;
        let (num, den) = if g > 1 { (num / g, den / g) } else { (num, den) };
        if fits(num) && fits(den) {
            Rational(Repr::Small(num as i64, den as i64))
        } else {
            Rational(Repr::Big(BigRational::new_raw(BigInt::from(num), BigInt::from(den))))
        }
    }

    fn from_big(r: BigRational) -> Rational {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(r))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    /// `num / den`. Panics when `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Rational {
        Rational::from_big(BigRational::new(num, den))
    }

    pub fn from_integer(value: BigInt) -> Rational {
        Rational::from_big(BigRational::from_integer(value))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    /// Always positive.
    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// `1 / self`. Panics on zero.
    pub fn recip(&self) -> Rational {
        match &self.0 {
            Repr::Small(0, _) => panic!("reciprocal of zero"),
            Repr::Small(n, d) => {
                if *n < 0 {
                    Rational(Repr::Small(-d, -n))
                } else {
                    Rational(Repr::Small(*d, *n))
                }
            }
            Repr::Big(r) => Rational::from_big(r.recip()),
        }
    }

    fn sign(&self) -> Ordering {
        match &self.0 {
            Repr::Small(n, _) => n.cmp(&0),
            Repr::Big(r) => {
                if r.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_i128(v as i128, 1)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational::from_big(r)
    }
}

impl From<Rational> for BigRational {
    fn from(r: Rational) -> Self {
        r.to_big()
    }
}

fn add_ref(a: &Rational, b: &Rational) -> Rational {
    match (&a.0, &b.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            let (n1, d1, n2, d2) = (*n1 as i128, *d1 as i128, *n2 as i128, *d2 as i128);
            if d1 == d2 {
                Rational::from_i128(n1 + n2, d1)
            } else {
                Rational::from_i128(n1 * d2 + n2 * d1, d1 * d2)
            }
        }
        _ => Rational::from_big(a.to_big() + b.to_big()),
    }
}

fn neg_ref(a: &Rational) -> Rational {
    match &a.0 {
        Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
        Repr::Big(r) => Rational::from_big(-r),
    }
}

fn sub_ref(a: &Rational, b: &Rational) -> Rational {
    match (&a.0, &b.0) {
        (Repr::Small(..), Repr::Small(..)) => add_ref(a, &neg_ref(b)),
        _ => Rational::from_big(a.to_big() - b.to_big()),
    }
}

fn mul_ref(a: &Rational, b: &Rational) -> Rational {
    match (&a.0, &b.0) {
        (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Rational::zero(),
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            Rational::from_i128(*n1 as i128 * *n2 as i128, *d1 as i128 * *d2 as i128)
        }
        _ => Rational::from_big(a.to_big() * b.to_big()),
    }
}

fn div_ref(a: &Rational, b: &Rational) -> Rational {
    assert!(!b.is_zero(), "division by zero");
    mul_ref(a, &b.recip())
}

fn rem_ref(a: &Rational, b: &Rational) -> Rational {
    Rational::from_big(a.to_big() % b.to_big())
}

macro_rules! binop {
    ($trait:ident, $method:ident, $f:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $f(self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $f(self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $f(&self, rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $f(&self, &rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);
binop!(Div, div, div_ref);
binop!(Rem, rem, rem_ref);

macro_rules! assignop {
    ($trait:ident, $method:ident, $f:ident) => {
        impl $trait<&Rational> for Rational {
            fn $method(&mut self, rhs: &Rational) {
                *self = $f(self, rhs);
            }
        }
        impl $trait<Rational> for Rational {
            fn $method(&mut self, rhs: Rational) {
                *self = $f(self, &rhs);
            }
        }
    };
}

assignop!(AddAssign, add_assign, add_ref);
assignop!(SubAssign, sub_assign, sub_ref);
assignop!(MulAssign, mul_assign, mul_ref);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        neg_ref(&self)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        neg_ref(self)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(n1, d1), Repr::Small(n2, d2)) => (*n1 as i128 * *d2 as i128).cmp(&(*n2 as i128 * *d1 as i128)),
            _ => {
                let (s1, s2) = (self.sign(), other.sign());
                if s1 != s2 {
                    return s1.cmp(&s2);
                }
                self.to_big().cmp(&other.to_big())
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
}

impl Num for Rational {
    type FromStrRadixErr = ParseRatioError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        BigRational::from_str_radix(s, radix).map(Rational::from_big)
    }
}

impl Signed for Rational {
    fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    fn abs_sub(&self, other: &Self) -> Self {
        if self <= other {
            Rational::zero()
        } else {
            self - other
        }
    }

    fn signum(&self) -> Self {
        match self.sign() {
            Ordering::Less => -Rational::one(),
            Ordering::Equal => Rational::zero(),
            Ordering::Greater => Rational::one(),
        }
    }

    fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: &str, d: &str) -> BigRational {
        BigRational::new(n.parse().unwrap(), d.parse().unwrap())
    }

    #[test]
    fn small_arithmetic_reduces() {
        let a = Rational::from_i128(2, 4);
        assert_eq!(a.to_string(), "1/2");
        assert_eq!((&a + &a).to_string(), "1");
        assert_eq!((&a - &Rational::from(1)).to_string(), "-1/2");
        assert_eq!(Rational::from_i128(3, -6).to_string(), "-1/2");
        assert_eq!((-&a).recip().to_string(), "-2");
    }

    #[test]
    fn overflow_promotes_and_shrinking_demotes() {
        let m = Rational::from(i64::MAX);
        let sq = &m * &m;
        assert!(matches!(sq.0, Repr::Big(_)));
        assert_eq!(
            sq.to_big(),
            big(&(i64::MAX as i128 * i64::MAX as i128).to_string(), "1")
        );
        let back = &sq / &m;
        assert_eq!(back, m);
        assert!(matches!(back.0, Repr::Small(..)));
        let min = Rational::from_big(big(&i64::MIN.to_string(), "1"));
        assert!(matches!(min.0, Repr::Big(_)));
        assert_eq!((-&min).to_big(), big("9223372036854775808", "1"));
    }

    #[test]
    fn ordering_across_representations() {
        let huge = Rational::from_big(big("100000000000000000000000", "3"));
        let small = Rational::from(5);
        assert!(huge > small);
        assert!(-&huge < small);
        assert!(Rational::from_i128(1, 3) < Rational::from_i128(1, 2));
        assert_eq!(huge.clone().max(small.clone()), huge);
    }

    #[test]
    fn agrees_with_big_rationals() {
        let vals = [(-7, 3), (5, 2), (0, 1), (i64::MAX, 3), (1, i64::MAX), (-9, 7)];
        for &(n1, d1) in &vals {
            for &(n2, d2) in &vals {
                let (a, b) = (
                    Rational::from_i128(n1 as i128, d1 as i128),
                    Rational::from_i128(n2 as i128, d2 as i128),
                );
                let (ba, bb) = (a.to_big(), b.to_big());
                assert_eq!((&a + &b).to_big(), &ba + &bb);
                assert_eq!((&a - &b).to_big(), &ba - &bb);
                assert_eq!((&a * &b).to_big(), &ba * &bb);
                if !b.is_zero() {
                    assert_eq!((&a / &b).to_big(), &ba / &bb);
                }
                assert_eq!(a.cmp(&b), ba.cmp(&bb));
            }
        }
    }
}

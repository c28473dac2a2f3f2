//! Exact rationals over arbitrary-precision integers.
//!
//! `Rational` is a thin newtype around `num_rational::BigRational`, which keeps
//! the value reduced with a positive denominator. The newtype fixes the
//! textual form (`p/q`, or `p` when `q = 1`) used by every serialized report.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num / den`, normalized. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den.into())))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn signum(&self) -> Ordering {
        self.0.cmp(&BigRational::zero())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))
        };
        match s.split_once('/') {
            None => Ok(Rational::from_bigint(parse(s)?)),
            Some((n, d)) => {
                let (n, d) = (parse(n)?, parse(d)?);
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Rational(BigRational::new(n, d)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A vector of exact rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatVector(pub Vec<Rational>);

impl RatVector {
    pub fn zeros(dim: usize) -> Self {
        RatVector(vec![Rational::zero(); dim])
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        RatVector(xs.iter().map(|&x| Rational::from_int(x)).collect())
    }

    /// Unit vector `e_j` scaled by `sign`.
    pub fn unit(dim: usize, j: usize, sign: i64) -> Self {
        let mut v = Self::zeros(dim);
        v.0[j] = Rational::from_int(sign);
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &Rational) -> RatVector {
        RatVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// The entries as integers, if they all are.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(Rational::to_i64).collect()
    }

    /// Rescales to the primitive integer vector on the same ray.
    ///
    /// The zero vector maps to itself.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|x| x / &g).collect()
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl From<Vec<Rational>> for RatVector {
    fn from(v: Vec<Rational>) -> Self {
        RatVector(v)
    }
}

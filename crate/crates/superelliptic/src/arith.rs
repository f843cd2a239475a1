//! Exact rational arithmetic and the elementary number theory used
//! everywhere else in the crate.
//!
//! All downstream quantities — genus counts, eigenspace ranks, slope
//! constants, rank bounds — are either integers or ratios of integers, and
//! every verdict is an exact comparison of such values.  [`Rational`] wraps
//! an arbitrary-precision fraction and fixes the textual convention used in
//! JSON output and reports: lowest terms, positive denominator, rendered as
//! `"num/den"`, shortened to `"num"` when the value is an integer.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// An exact rational number.
///
/// Thin wrapper over an arbitrary-precision fraction, kept in lowest terms
/// with a positive denominator.  Displayed and serialized as `"num/den"`
/// (`"num"` for integers), e.g. `39/7`, `-3/4`, `6`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`.
    ///
    /// # Panics
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Builds `num/den` from big integers.
    ///
    /// # Panics
    ///
    /// Panics if `den` is zero.
    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Numerator in lowest terms (sign lives here).
    pub fn numer(&self) -> BigInt {
        self.0.numer().clone()
    }

    /// Denominator in lowest terms; always positive.
    pub fn denom(&self) -> BigInt {
        self.0.denom().clone()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Largest integer `<= self`.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Exact conversion to `u64` when the value is a small nonnegative
    /// integer; `None` otherwise.
    pub fn to_u64(&self) -> Option<u64> {
        use num::ToPrimitive;
        if self.is_integer() {
            self.numer().to_u64()
        } else {
            None
        }
    }
}

impl From<i64> for Rational {
    fn from(k: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(k)))
    }
}

impl From<u64> for Rational {
    fn from(k: u64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(k)))
    }
}

impl From<BigInt> for Rational {
    fn from(k: BigInt) -> Self {
        Rational(BigRational::from_integer(k))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
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

impl Div for Rational {
    type Output = Rational;

    /// # Panics
    ///
    /// Panics on division by zero; callers guard the denominator.
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0.div(rhs.0))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(self.0.neg())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parse_int = |t: &str| {
            BigInt::from_str(t.trim())
                .map_err(|_| Error::invalid(format!("not an integer: {t:?}")))
        };
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
            Some((num, den)) => {
                let den = parse_int(den)?;
                if den.is_zero() {
                    return Err(Error::invalid("zero denominator"));
                }
                Ok(Rational(BigRational::new(parse_int(num)?, den)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Splits `x` into integral and fractional parts: `x = q + r` with `q` an
/// integer and `0 <= r < 1`.  The floor convention is used for negative
/// input, so `-7/4` splits as `(-2, 1/4)`.
pub fn floor_and_frac(x: &Rational) -> (BigInt, Rational) {
    let q = x.floor_int();
    let r = x.clone() - Rational::from(q.clone());
    debug_assert!(!r.is_negative() && r < Rational::one());
    (q, r)
}

/// Euler's totient `phi(n)`, the number of units mod `n`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi undefined at 0");
    let mut remaining = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= remaining {
        if remaining % p == 0 {
            while remaining % p == 0 {
                remaining /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if remaining > 1 {
        phi -= phi / remaining;
    }
    phi
}

/// Primality by trial division; fast for the word-sized inputs used here.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

/// Orbits of the unit group `(Z/n)^*` acting by multiplication on the
/// nonzero residues `{1, ..., n-1}`.
///
/// Each orbit is sorted ascending and the orbits are sorted by smallest
/// element, so the result is canonical.  The orbit of `i` consists of all
/// `j` with `gcd(j, n) = gcd(i, n)`; in particular the orbit of `1` is the
/// unit group itself and has `phi(n)` elements.
///
/// # Panics
///
/// Panics if `n < 2`.
pub fn unit_orbits(n: u64) -> Vec<Vec<u64>> {
    assert!(n >= 2, "unit_orbits needs n >= 2");
    let mut seen = vec![false; n as usize];
    let mut orbits = Vec::new();
    for i in 1..n {
        if seen[i as usize] {
            continue;
        }
        let d = num::integer::gcd(i, n);
        let orbit: Vec<u64> = (1..n).filter(|&j| num::integer::gcd(j, n) == d).collect();
        for &j in &orbit {
            seen[j as usize] = true;
        }
        orbits.push(orbit);
    }
    orbits
}

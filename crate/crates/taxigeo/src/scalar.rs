//! Exact rational scalars.
//!
//! Every coordinate, distance, and angle in this crate is a [`Scalar`]: an
//! arbitrary-precision rational kept in lowest terms with a positive
//! denominator. There is no floating point anywhere in the kernel, so every
//! comparison is an exact equality test.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseError;

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    /// Ratio of two machine integers.
    ///
    /// Panics if `den == 0`; use the `FromStr` parser for untrusted input.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar(BigRational::from_integer(n))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
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

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    /// -1, 0, or +1.
    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Remainder of `self` modulo `m`, in `[0, m)`. Requires `m > 0`.
    pub fn rem_euclid(&self, m: &Scalar) -> Self {
        assert!(m.is_positive(), "modulus must be positive");
        let q = (&self.0 / &m.0).floor();
        Scalar(&self.0 - q * &m.0)
    }

    /// Largest integer `<= self`, as a big integer.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Lossy conversion for rendering only; the kernel never consumes this.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from(i64::from(n))
    }
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt, ParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit() || b == b'-') {
        return Err(ParseError::Scalar(whole.to_owned()));
    }
    s.parse::<BigInt>()
        .map_err(|_| ParseError::Scalar(whole.to_owned()))
}

impl FromStr for Scalar {
    type Err = ParseError;

    /// Accepts `INT`, `INT/INT`, or a finite decimal such as `1.5` or `-0.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::Scalar(s.to_owned());
        if let Some((num, den)) = s.split_once('/') {
            let num = parse_int(num, s)?;
            let den = parse_int(den, s)?;
            if den.is_zero() {
                return Err(bad());
            }
            return Ok(Scalar(BigRational::new(num, den)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let (sign, digits) = match int_part.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, int_part),
            };
            if digits.is_empty()
                || frac_part.is_empty()
                || !digits.bytes().all(|b| b.is_ascii_digit())
                || !frac_part.bytes().all(|b| b.is_ascii_digit())
            {
                return Err(bad());
            }
            let whole: BigInt = digits.parse().map_err(|_| bad())?;
            let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
            let scale = BigInt::from(10).pow(frac_part.len() as u32);
            let magnitude = whole * &scale + frac;
            return Ok(Scalar(BigRational::new(magnitude * sign, scale)));
        }
        Ok(Scalar(BigRational::from_integer(parse_int(s, s)?)))
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0 $op rhs.0)
            }
        }
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0 $op &rhs.0)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(&self.0 $op rhs.0)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);
scalar_binop!(Div, div, /);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn parses_integers_fractions_decimals() {
        assert_eq!(s("7"), Scalar::from(7));
        assert_eq!(s("-3"), Scalar::from(-3));
        assert_eq!(s("3/2"), Scalar::ratio(3, 2));
        assert_eq!(s("-4/6"), Scalar::ratio(-2, 3));
        assert_eq!(s("4/-6"), Scalar::ratio(-2, 3));
        assert_eq!(s("1.5"), Scalar::ratio(3, 2));
        assert_eq!(s("-0.25"), Scalar::ratio(-1, 4));
        assert_eq!(s("2.50"), Scalar::ratio(5, 2));
    }

    #[test]
    fn rejects_malformed_literals() {
        for text in ["", "x", "1/0", "1//2", "1.", ".5", "1.5.2", "1e3", "+4", "1 /2"] {
            assert!(text.parse::<Scalar>().is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn canonical_display() {
        assert_eq!(s("4/2").to_string(), "2");
        assert_eq!(s("-6/4").to_string(), "-3/2");
        assert_eq!(s("0").to_string(), "0");
        assert_eq!(s("0.5").to_string(), "1/2");
    }

    #[test]
    fn lowest_terms_invariant() {
        let v = s("10/15");
        assert_eq!(v.numerator(), &BigInt::from(2));
        assert_eq!(v.denominator(), &BigInt::from(3));
        let w = s("-10/15");
        assert_eq!(w.numerator(), &BigInt::from(-2));
        assert_eq!(w.denominator(), &BigInt::from(3));
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = Scalar::ratio(1, 3);
        let sum = &third + &third + third;
        assert_eq!(sum, Scalar::one());
        assert_eq!(Scalar::ratio(1, 10) + Scalar::ratio(2, 10), Scalar::ratio(3, 10));
        assert_eq!(Scalar::ratio(-7, 2).abs(), Scalar::ratio(7, 2));
        assert_eq!(Scalar::ratio(3, 4).signum(), 1);
        assert_eq!(Scalar::zero().signum(), 0);
        assert_eq!(Scalar::ratio(-1, 9).signum(), -1);
    }

    #[test]
    fn rem_euclid_lands_in_range() {
        let m = Scalar::from(8);
        assert_eq!(Scalar::from(19).rem_euclid(&m), Scalar::from(3));
        assert_eq!(Scalar::from(-1).rem_euclid(&m), Scalar::from(7));
        assert_eq!(Scalar::ratio(-5, 2).rem_euclid(&m), Scalar::ratio(11, 2));
        assert_eq!(Scalar::from(8).rem_euclid(&m), Scalar::zero());
    }

    proptest::proptest! {
        #[test]
        fn format_parse_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let v = Scalar::ratio(n, d);
            let back: Scalar = v.to_string().parse().unwrap();
            proptest::prop_assert_eq!(back, v);
        }

        #[test]
        fn rem_euclid_range(n in -500i64..500, d in 1i64..60, m in 1i64..50) {
            let v = Scalar::ratio(n, d);
            let m = Scalar::from(m);
            let r = v.rem_euclid(&m);
            proptest::prop_assert!(!r.is_negative() && r < m);
            // difference is an integer multiple of m
            let q = (&v - &r) / m;
            proptest::prop_assert!(q.is_integer());
        }
    }
}

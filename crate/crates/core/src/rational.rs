//! Arbitrary-precision exact rationals.
//!
//! Every judgment, weight and vertex coordinate in this crate is a [`Rational`].
//! Consistency is an exact equality (`a_ij a_jk a_ki = 1`), so nothing that feeds
//! a comparison is ever rounded.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Maximum number of digits accepted after a decimal point.
pub const MAX_FRACTION_DIGITS: usize = 15;

/// An exact fraction in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// The exact value of a finite double (every finite `f64` is a dyadic rational).
    pub fn from_f64_exact(value: f64) -> Option<Self> {
        BigRational::from_float(value).map(Rational)
    }

    /// Parses `"p"`, `"p/q"` or a decimal with at most 15 fraction digits.
    ///
    /// Decimals are converted exactly: `"0.25"` becomes `1/4`.
    pub fn parse(text: &str) -> Result<Self> {
        let s = text.trim();
        let bad = || Error::BadNumeral(format!("{text:?}"));
        if s.is_empty() {
            return Err(bad());
        }
        if let Some((p, q)) = s.split_once('/') {
            let numer = parse_integer(p.trim()).ok_or_else(bad)?;
            let denom = parse_integer(q.trim()).ok_or_else(bad)?;
            if denom.is_zero() {
                return Err(bad());
            }
            return Ok(Rational(BigRational::new(numer, denom)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let (negative, int_digits) = strip_sign(int_part);
            if frac_part.is_empty()
                || frac_part.len() > MAX_FRACTION_DIGITS
                || !frac_part.bytes().all(|b| b.is_ascii_digit())
                || !int_digits.bytes().all(|b| b.is_ascii_digit())
            {
                return Err(bad());
            }
            let digits = format!("{int_digits}{frac_part}");
            let mut numer: BigInt = digits.parse().map_err(|_| bad())?;
            if negative {
                numer = -numer;
            }
            let denom = BigInt::from(10u64).pow(frac_part.len() as u32);
            return Ok(Rational(BigRational::new(numer, denom)));
        }
        let numer = parse_integer(s).ok_or_else(bad)?;
        Ok(Rational(BigRational::from_integer(numer)))
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// `1/self`. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Nearest double.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

fn strip_sign(s: &str) -> (bool, &str) {
    if let Some(rest) = s.strip_prefix('-') {
        (true, rest)
    } else {
        (false, s.strip_prefix('+').unwrap_or(s))
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let (negative, digits) = strip_sign(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let value: BigInt = digits.parse().ok()?;
    Some(if negative { -value } else { value })
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rational::parse(s)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
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

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Rational::parse(&text).map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

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

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Compares `lhs` against one without allocating a temporary.
pub(crate) fn cmp_one(value: &Rational) -> Ordering {
    value.numer().cmp(value.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_all_numeral_forms() {
        assert_eq!(Rational::parse("7").unwrap(), Rational::from_integer(7));
        assert_eq!(Rational::parse("1/3").unwrap(), Rational::new(1, 3));
        assert_eq!(Rational::parse(" 6/4 ").unwrap(), Rational::new(3, 2));
        assert_eq!(Rational::parse("0.25").unwrap(), Rational::new(1, 4));
        assert_eq!(Rational::parse("-1.5").unwrap(), Rational::new(-3, 2));
        assert_eq!(Rational::parse(".5").unwrap(), Rational::new(1, 2));
        assert_eq!(
            Rational::parse("0.123456789012345").unwrap(),
            Rational::new(123_456_789_012_345, 1_000_000_000_000_000)
        );
    }

    #[test]
    fn rejects_malformed_numerals() {
        for text in ["", " ", "abc", "1/0", "1/", "/2", "1.", "1e3", "0.1234567890123456", "1.2.3", "--1", "2/3/4"] {
            assert!(
                matches!(Rational::parse(text), Err(Error::BadNumeral(_))),
                "{text:?} should be rejected"
            );
        }
    }

    #[test]
    fn display_uses_lowest_terms() {
        assert_eq!(Rational::new(10, -4).to_string(), "-5/2");
        assert_eq!(Rational::new(8, 4).to_string(), "2");
        assert_eq!(Rational::new(0, 5).to_string(), "0");
    }

    #[test]
    fn exact_float_conversion() {
        assert_eq!(Rational::from_f64_exact(0.375).unwrap(), Rational::new(3, 8));
        assert!(Rational::from_f64_exact(f64::NAN).is_none());
        assert_eq!(cmp_one(&Rational::new(2, 21)), Ordering::Less);
        assert_eq!(cmp_one(&Rational::new(7, 7)), Ordering::Equal);
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
            let r = Rational::new(p, q);
            prop_assert_eq!(Rational::parse(&r.to_string()).unwrap(), r);
        }

        #[test]
        fn reciprocal_is_multiplicative_inverse(p in 1i64..100_000, q in 1i64..100_000) {
            let r = Rational::new(p, q);
            prop_assert!((&r * &r.recip()).is_one());
        }
    }
}

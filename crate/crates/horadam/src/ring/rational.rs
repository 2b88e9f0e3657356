//! Arbitrary-precision rationals in lowest terms.

use crate::error::{Error, Result};
use crate::ring::{not_invertible_in, Ring};
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// A fraction p/q of arbitrary-precision integers, always normalized:
/// q > 0, gcd(|p|, q) = 1, and zero is exactly 0/1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Builds the unique reduced representative of `num/den` with a
    /// positive denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    /// The integer `n` as a rational n/1.
    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    fn reduced(mut num: BigInt, mut den: BigInt) -> Self {
        if num.is_zero() {
            return Rational {
                num,
                den: BigInt::one(),
            };
        }
        if den.sign() == Sign::Minus {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Rational { num, den }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        // Integer fast path keeps long iterations free of gcd work.
        if self.den.is_one() && rhs.den.is_one() {
            return Rational {
                num: self.num + rhs.num,
                den: self.den,
            };
        }
        Rational::reduced(&self.num * &rhs.den + &rhs.num * &self.den, self.den * rhs.den)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        if self.den.is_one() && rhs.den.is_one() {
            return Rational {
                num: self.num - rhs.num,
                den: self.den,
            };
        }
        Rational::reduced(&self.num * &rhs.den - &rhs.num * &self.den, self.den * rhs.den)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        if self.den.is_one() && rhs.den.is_one() {
            return Rational {
                num: self.num * rhs.num,
                den: self.den,
            };
        }
        Rational::reduced(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::integer(0)
    }

    fn one() -> Self {
        Rational::integer(1)
    }

    fn from_int(n: i64) -> Self {
        Rational::integer(n)
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn is_unit(&self) -> bool {
        !self.num.is_zero()
    }

    fn inverse(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(not_invertible_in(self));
        }
        Ok(Rational::reduced(self.den.clone(), self.num.clone()))
    }

    fn ring_name() -> &'static str {
        "the rationals"
    }

    fn pow(&self, n: i64) -> Result<Self> {
        // p/q is reduced, so p^n/q^n already is; exponentiate components.
        if n == 0 {
            return Ok(Rational::integer(1));
        }
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let exp = n.unsigned_abs();
        Ok(Rational {
            num: Pow::pow(base.num, exp),
            den: Pow::pow(base.den, exp),
        })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` in decimal.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = || Error::Parse {
            input: s.to_string(),
            expected: "a rational \"p\" or \"p/q\"",
        };
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let num = BigInt::from_str(s).map_err(|_| parse_err())?;
                Ok(Rational::integer(num))
            }
            Some((p, q)) => {
                let num = BigInt::from_str(p.trim()).map_err(|_| parse_err())?;
                let den = BigInt::from_str(q.trim()).map_err(|_| parse_err())?;
                Rational::new(num, den)
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    /// Independent normalization oracle: subtraction-free Euclidean gcd
    /// on machine integers plus explicit sign bookkeeping.
    fn normalize_oracle(num: i64, den: i64) -> (i64, i64) {
        assert!(den != 0);
        if num == 0 {
            return (0, 1);
        }
        let mut a = num.abs();
        let mut b = den.abs();
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        let sign = if (num < 0) != (den < 0) { -1 } else { 1 };
        (sign * num.abs() / a, den.abs() / a)
    }

    #[test]
    fn normalizes_to_lowest_terms() {
        assert_eq!(rat(10, 4), rat(5, 2));
        assert_eq!(rat(10, 4).to_string(), "5/2");
    }

    #[test]
    fn zero_is_canonical() {
        let z = rat(0, 5);
        assert_eq!(z.numerator(), &BigInt::from(0));
        assert_eq!(z.denominator(), &BigInt::from(1));
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn negative_denominator_moves_sign_up() {
        let (n, d) = normalize_oracle(6, -4);
        assert_eq!((n, d), (-3, 2));
        assert_eq!(rat(6, -4), rat(n, d));
        assert_eq!(rat(6, -4).to_string(), "-3/2");
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(Rational::new(3, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn inverse_of_fraction() {
        assert_eq!(rat(3, 5).inverse().unwrap(), rat(5, 3));
        assert!(matches!(
            Rational::zero().inverse(),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let two = Rational::from_int(2);
        let mut by_hand = Rational::one();
        for _ in 0..10 {
            by_hand = by_hand * two.clone();
        }
        assert_eq!(by_hand, Rational::integer(1024));
        assert_eq!(two.pow(10).unwrap(), by_hand);
    }

    #[test]
    fn pow_zero_is_one() {
        assert_eq!(rat(7, 3).pow(0).unwrap(), Rational::one());
    }

    #[test]
    fn negative_pow_inverts_then_raises() {
        // (1/2)^-3 = 2^3
        assert_eq!(rat(1, 2).pow(-3).unwrap(), Rational::integer(8));
        assert!(Rational::zero().pow(-1).is_err());
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!("5/2".parse::<Rational>().unwrap(), rat(5, 2));
        assert_eq!("-7".parse::<Rational>().unwrap(), rat(-7, 1));
        assert_eq!(" 6/-4 ".parse::<Rational>().unwrap(), rat(-3, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    proptest! {
        #[test]
        fn construction_agrees_with_gcd_oracle(num in -10_000i64..10_000, den in 1i64..10_000, sign in prop::bool::ANY) {
            let den = if sign { den } else { -den };
            let (n, d) = normalize_oracle(num, den);
            let r = rat(num, den);
            prop_assert_eq!(r.numerator(), &BigInt::from(n));
            prop_assert_eq!(r.denominator(), &BigInt::from(d));
        }

        #[test]
        fn display_round_trips(num in -10_000i64..10_000, den in 1i64..10_000) {
            let r = rat(num, den);
            let back: Rational = r.to_string().parse().unwrap();
            prop_assert_eq!(back, r);
        }

        #[test]
        fn field_laws_hold(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50, e in -50i64..50, f in 1i64..50) {
            let (x, y, z) = (rat(a, b), rat(c, d), rat(e, f));
            prop_assert_eq!(
                (x.clone() + y.clone()) + z.clone(),
                x.clone() + (y.clone() + z.clone())
            );
            prop_assert_eq!(
                x.clone() * (y.clone() + z.clone()),
                x.clone() * y.clone() + x.clone() * z
            );
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * x.inverse().unwrap(), Rational::one());
            }
        }
    }
}

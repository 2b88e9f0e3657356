//! Exact commutative-ring scalars.
//!
//! Three rings share one contract: arbitrary-precision rationals
//! ([`Rational`]), a formal quadratic extension a + b·t with t² = Δ
//! ([`QuadExtElem`]), and dense univariate polynomials with rational
//! coefficients ([`Poly`]). Every value is immutable and every operation
//! is a pure function; equality is exact, never approximate.

mod poly;
mod quadext;
mod rational;

pub use poly::Poly;
pub use quadext::QuadExtElem;
pub use rational::Rational;

use crate::error::{Error, Result};
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

/// A unital commutative ring with exact equality and partial inversion.
///
/// Division is deliberately absent: the formulas implemented by this crate
/// divide only by units, so inversion is a fallible operation and callers
/// surface a [`Error::NotInvertible`] instead of approximating.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn zero() -> Self;

    fn one() -> Self;

    /// The canonical image of a small integer in this ring.
    fn from_int(n: i64) -> Self;

    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Whether `self` has a multiplicative inverse in this ring.
    fn is_unit(&self) -> bool;

    /// The multiplicative inverse, or [`Error::NotInvertible`] naming the
    /// element and its ring.
    fn inverse(&self) -> Result<Self>;

    /// Ring name used in error messages.
    fn ring_name() -> &'static str;

    /// `self^n` by binary exponentiation, for any integer exponent.
    ///
    /// `x^0 = 1` for every `x`; negative exponents require a unit.
    fn pow(&self, n: i64) -> Result<Self> {
        let (base, mut exp) = if n < 0 {
            (self.inverse()?, n.unsigned_abs())
        } else {
            (self.clone(), n as u64)
        };
        let mut acc = Self::one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * sq.clone();
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.clone() * sq;
            }
        }
        Ok(acc)
    }
}

/// `self^n` counting the ring multiplications performed.
///
/// Same result as [`Ring::pow`]; used by the benchmark harness.
pub fn pow_counted<R: Ring>(x: &R, n: i64) -> Result<(R, u64)> {
    let mut muls = 0u64;
    let (base, mut exp) = if n < 0 {
        (x.inverse()?, n.unsigned_abs())
    } else {
        (x.clone(), n as u64)
    };
    let mut acc = R::one();
    let mut sq = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * sq.clone();
            muls += 1;
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.clone() * sq;
            muls += 1;
        }
    }
    Ok((acc, muls))
}

pub(crate) fn not_invertible_in<R: Ring>(value: &R) -> Error {
    Error::not_invertible(format!("{value} in {}", R::ring_name()))
}

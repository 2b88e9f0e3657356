//! Formal quadratic extension of the rationals.
//!
//! An element is a pair a + b·t with t² = Δ for a fixed nonzero rational Δ.
//! No numeric square root is ever taken: when Δ is negative or a perfect
//! square the structure is still a perfectly good commutative ring (in the
//! perfect-square case it has zero divisors, so units are exactly the
//! elements with nonzero norm a² − b²Δ, and t itself is always one).

use crate::error::{Error, Result};
use crate::ring::{not_invertible_in, Rational, Ring};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// a + b·t with t² = Δ.
///
/// Elements produced by [`QuadExtElem::from_rational`] (and the ring
/// constants `zero`/`one`) have no t-component and belong to the scalar
/// subring shared by every extension; they combine freely with elements
/// of any concrete Δ. Elements with a t-component carry their Δ, and
/// arithmetic between different concrete Δs is an error.
#[derive(Clone)]
pub struct QuadExtElem {
    a: Rational,
    b: Rational,
    delta: Option<Rational>,
}

impl PartialEq for QuadExtElem {
    fn eq(&self, other: &Self) -> bool {
        if self.a != other.a || self.b != other.b {
            return false;
        }
        // Scalars are identified across extensions; once a t-component
        // is present the ambient Δ must agree too.
        self.b.is_zero() || self.delta == other.delta
    }
}

impl Eq for QuadExtElem {}

impl QuadExtElem {
    /// a + b·t in the extension with t² = Δ. Δ must be nonzero.
    pub fn new(a: Rational, b: Rational, delta: Rational) -> Result<Self> {
        if delta.is_zero() {
            return Err(Error::DegenerateDiscriminant);
        }
        Ok(QuadExtElem {
            a,
            b,
            delta: Some(delta),
        })
    }

    /// The scalar `a`, compatible with every extension.
    pub fn from_rational(a: Rational) -> Self {
        QuadExtElem {
            a,
            b: Rational::zero(),
            delta: None,
        }
    }

    /// The generator t of the extension with t² = Δ.
    pub fn sqrt_of(delta: Rational) -> Result<Self> {
        QuadExtElem::new(Rational::zero(), Rational::one(), delta)
    }

    pub fn scalar_part(&self) -> &Rational {
        &self.a
    }

    pub fn t_part(&self) -> &Rational {
        &self.b
    }

    /// The Δ this element is committed to, if it has left the scalar subring.
    pub fn delta(&self) -> Option<&Rational> {
        self.delta.as_ref()
    }

    /// The conjugate a − b·t.
    pub fn conjugate(&self) -> Self {
        QuadExtElem {
            a: self.a.clone(),
            b: self.b.clone().neg(),
            delta: self.delta.clone(),
        }
    }

    /// The norm a² − b²Δ, a rational. Units are exactly the elements of
    /// nonzero norm.
    pub fn norm(&self) -> Rational {
        match &self.delta {
            None => self.a.clone() * self.a.clone(),
            Some(d) => {
                self.a.clone() * self.a.clone() - self.b.clone() * self.b.clone() * d.clone()
            }
        }
    }

    /// Multiplication that reports a mismatched Δ instead of panicking.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let delta = joined_delta(self, rhs)?;
        Ok(mul_with_delta(self, rhs, delta))
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let delta = joined_delta(self, rhs)?;
        Ok(QuadExtElem {
            a: self.a.clone() + rhs.a.clone(),
            b: self.b.clone() + rhs.b.clone(),
            delta,
        })
    }
}

/// The common Δ of two operands: scalars adopt the other side's extension,
/// and two concrete extensions must agree.
fn joined_delta(x: &QuadExtElem, y: &QuadExtElem) -> Result<Option<Rational>> {
    match (&x.delta, &y.delta) {
        (None, d) | (d, None) => Ok(d.clone()),
        (Some(l), Some(r)) if l == r => Ok(Some(l.clone())),
        (Some(l), Some(r)) => Err(Error::IncompatibleExtension {
            left: l.to_string(),
            right: r.to_string(),
        }),
    }
}

fn mul_with_delta(x: &QuadExtElem, y: &QuadExtElem, delta: Option<Rational>) -> QuadExtElem {
    // (a1 + b1 t)(a2 + b2 t) = (a1 a2 + b1 b2 Δ) + (a1 b2 + a2 b1) t
    let cross = x.a.clone() * y.b.clone() + y.a.clone() * x.b.clone();
    let mut scalar = x.a.clone() * y.a.clone();
    if let Some(d) = &delta {
        let bb = x.b.clone() * y.b.clone();
        if !bb.is_zero() {
            scalar = scalar + bb * d.clone();
        }
    }
    QuadExtElem {
        a: scalar,
        b: cross,
        delta,
    }
}

impl Add for QuadExtElem {
    type Output = QuadExtElem;
    fn add(self, rhs: QuadExtElem) -> QuadExtElem {
        self.checked_add(&rhs).expect("operands from one extension")
    }
}

impl Sub for QuadExtElem {
    type Output = QuadExtElem;
    fn sub(self, rhs: QuadExtElem) -> QuadExtElem {
        self + (-rhs)
    }
}

impl Mul for QuadExtElem {
    type Output = QuadExtElem;
    fn mul(self, rhs: QuadExtElem) -> QuadExtElem {
        self.checked_mul(&rhs).expect("operands from one extension")
    }
}

impl Neg for QuadExtElem {
    type Output = QuadExtElem;
    fn neg(self) -> QuadExtElem {
        QuadExtElem {
            a: -self.a,
            b: -self.b,
            delta: self.delta,
        }
    }
}

impl Ring for QuadExtElem {
    fn zero() -> Self {
        QuadExtElem::from_rational(Rational::zero())
    }

    fn one() -> Self {
        QuadExtElem::from_rational(Rational::one())
    }

    fn from_int(n: i64) -> Self {
        QuadExtElem::from_rational(Rational::integer(n))
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    fn is_unit(&self) -> bool {
        self.norm().is_unit()
    }

    fn inverse(&self) -> Result<Self> {
        // (a + b t)^-1 = (a - b t) / (a^2 - b^2 Δ); in particular
        // t^-1 = t / Δ, so t is a unit in every extension.
        let norm = self.norm();
        if norm.is_zero() {
            return Err(not_invertible_in(self));
        }
        let inv = norm.inverse()?;
        Ok(QuadExtElem {
            a: self.a.clone() * inv.clone(),
            b: self.b.clone().neg() * inv,
            delta: self.delta.clone(),
        })
    }

    fn ring_name() -> &'static str {
        "the quadratic extension"
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.delta, self.b.is_zero()) {
            (None, _) | (_, true) => write!(f, "{}", self.a),
            (Some(d), false) => write!(f, "{} + {}*t [t^2={}]", self.a, self.b, d),
        }
    }
}

impl fmt::Debug for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for QuadExtElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("QuadExtElem", 3)?;
        s.serialize_field("a", &self.a)?;
        s.serialize_field("b", &self.b)?;
        s.serialize_field("delta", &self.delta)?;
        s.end()
    }
}

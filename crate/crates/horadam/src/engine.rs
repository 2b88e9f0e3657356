//! Recurrence specification, companion-matrix machinery and the two
//! baseline evaluators.
//!
//! A sequence is R_{n+1} = f·R_n + g·R_{n-1} with R_0 = h and R_1 = k,
//! over any [`Ring`]. The linear evaluator [`r_iter`] is the ground truth
//! every other method in this crate is checked against; [`r_fast`] reaches
//! the same values in O(log |n|) matrix multiplications.

use crate::error::{Error, Result};
use crate::ring::Ring;
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The quadruple (f, g, h, k); f and g nonzero.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct RecurrenceSpec<R: Ring> {
    f: R,
    g: R,
    h: R,
    k: R,
}

impl<R: Ring> RecurrenceSpec<R> {
    /// Rejects f = 0 and g = 0: such recurrences degenerate to first
    /// order and are outside this crate's scope.
    pub fn new(f: R, g: R, h: R, k: R) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroRecurrenceCoefficient { name: "f" });
        }
        if g.is_zero() {
            return Err(Error::ZeroRecurrenceCoefficient { name: "g" });
        }
        Ok(RecurrenceSpec { f, g, h, k })
    }

    pub fn f(&self) -> &R {
        &self.f
    }

    pub fn g(&self) -> &R {
        &self.g
    }

    pub fn h(&self) -> &R {
        &self.h
    }

    pub fn k(&self) -> &R {
        &self.k
    }

    /// The discriminant Δ = f² + 4g of the characteristic polynomial.
    pub fn discriminant(&self) -> R {
        self.f.clone() * self.f.clone() + R::from_int(4) * self.g.clone()
    }

    /// The seed invariant q = g·h² − k² + f·h·k that drives the case
    /// split of the closed forms (and the Cassini constant, up to sign).
    pub fn seed_invariant(&self) -> R {
        self.g.clone() * self.h.clone() * self.h.clone() - self.k.clone() * self.k.clone()
            + self.f.clone() * self.h.clone() * self.k.clone()
    }
}

impl<R: Ring> fmt::Display for RecurrenceSpec<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(f={}, g={}, h={}, k={})",
            self.f, self.g, self.h, self.k
        )
    }
}

/// A 2×2 matrix over a ring.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<R> {
    pub a11: R,
    pub a12: R,
    pub a21: R,
    pub a22: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(a11: R, a12: R, a21: R, a22: R) -> Self {
        Mat2 { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Mat2::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn diagonal(d1: R, d2: R) -> Self {
        Mat2::new(d1, R::zero(), R::zero(), d2)
    }

    pub fn is_zero(&self) -> bool {
        self.a11.is_zero() && self.a12.is_zero() && self.a21.is_zero() && self.a22.is_zero()
    }

    pub fn det(&self) -> R {
        self.a11.clone() * self.a22.clone() - self.a12.clone() * self.a21.clone()
    }

    pub fn scale(&self, c: &R) -> Self {
        Mat2::new(
            c.clone() * self.a11.clone(),
            c.clone() * self.a12.clone(),
            c.clone() * self.a21.clone(),
            c.clone() * self.a22.clone(),
        )
    }

    /// The adjugate [[a22, −a12], [−a21, a11]]; m · adj(m) = det(m) · I.
    pub fn adjugate(&self) -> Self {
        Mat2::new(
            self.a22.clone(),
            self.a12.clone().neg(),
            self.a21.clone().neg(),
            self.a11.clone(),
        )
    }

    /// Inverse via adjugate over determinant; requires det to be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let det_inv = self
            .det()
            .inverse()
            .map_err(|_| Error::not_invertible(format!("matrix determinant {}", self.det())))?;
        Ok(self.adjugate().scale(&det_inv))
    }

    /// mⁿ for any integer n. m⁰ = I; negative powers invert once and
    /// exponentiate the inverse, so they require a unit determinant.
    pub fn pow(&self, n: i64) -> Result<Self> {
        Ok(self.pow_counted(n)?.0)
    }

    /// Like [`Mat2::pow`], also reporting how many 2×2 matrix
    /// multiplications were performed (the benchmark harness asserts the
    /// O(log n) bound on this count).
    pub fn pow_counted(&self, n: i64) -> Result<(Self, u64)> {
        let (mut sq, mut exp) = if n < 0 {
            (self.inverse()?, n.unsigned_abs())
        } else {
            (self.clone(), n as u64)
        };
        let mut acc = Mat2::identity();
        let mut muls = 0u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&sq);
                muls += 1;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul_ref(&sq);
                muls += 1;
            }
        }
        Ok((acc, muls))
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        Mat2::new(
            self.a11.clone() * rhs.a11.clone() + self.a12.clone() * rhs.a21.clone(),
            self.a11.clone() * rhs.a12.clone() + self.a12.clone() * rhs.a22.clone(),
            self.a21.clone() * rhs.a11.clone() + self.a22.clone() * rhs.a21.clone(),
            self.a21.clone() * rhs.a12.clone() + self.a22.clone() * rhs.a22.clone(),
        )
    }

    /// Entrywise image under `f`; lifts matrices into a larger ring.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Mat2<S> {
        Mat2::new(f(&self.a11), f(&self.a12), f(&self.a21), f(&self.a22))
    }
}

impl<R: Ring> Add for Mat2<R> {
    type Output = Mat2<R>;
    fn add(self, rhs: Mat2<R>) -> Mat2<R> {
        Mat2::new(
            self.a11 + rhs.a11,
            self.a12 + rhs.a12,
            self.a21 + rhs.a21,
            self.a22 + rhs.a22,
        )
    }
}

impl<R: Ring> Sub for Mat2<R> {
    type Output = Mat2<R>;
    fn sub(self, rhs: Mat2<R>) -> Mat2<R> {
        Mat2::new(
            self.a11 - rhs.a11,
            self.a12 - rhs.a12,
            self.a21 - rhs.a21,
            self.a22 - rhs.a22,
        )
    }
}

impl<R: Ring> Mul for Mat2<R> {
    type Output = Mat2<R>;
    fn mul(self, rhs: Mat2<R>) -> Mat2<R> {
        self.mul_ref(&rhs)
    }
}

impl<R: Ring> Neg for Mat2<R> {
    type Output = Mat2<R>;
    fn neg(self) -> Mat2<R> {
        Mat2::new(-self.a11, -self.a12, -self.a21, -self.a22)
    }
}

impl<R: Ring> fmt::Display for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

/// The companion matrix B = [[0, g], [1, f]]; [R_n, R_{n+1}] = [h, k]·Bⁿ.
pub fn companion<R: Ring>(spec: &RecurrenceSpec<R>) -> Mat2<R> {
    Mat2::new(
        R::zero(),
        spec.g().clone(),
        R::one(),
        spec.f().clone(),
    )
}

/// The four pairwise-commuting matrices tied to a recurrence:
///
/// * A = [[2gh + f²h − fk, 2kg − fhg], [2k − fh, 2gh + fk]]
/// * B = [[0, g], [1, f]]
/// * C = [[2g, fg], [f, f² + 2g]]
/// * D = [[−f, 2g], [2, f]]
///
/// They satisfy A·Bⁿ = C·R_n + D·g·R_{n−1} for every integer n
/// (see [`matrix_identity_residual`]).
pub fn build_abcd<R: Ring>(spec: &RecurrenceSpec<R>) -> (Mat2<R>, Mat2<R>, Mat2<R>, Mat2<R>) {
    let (f, g, h, k) = (
        spec.f().clone(),
        spec.g().clone(),
        spec.h().clone(),
        spec.k().clone(),
    );
    let two = R::from_int(2);
    let a = Mat2::new(
        two.clone() * g.clone() * h.clone() + f.clone() * f.clone() * h.clone()
            - f.clone() * k.clone(),
        two.clone() * k.clone() * g.clone() - f.clone() * h.clone() * g.clone(),
        two.clone() * k.clone() - f.clone() * h.clone(),
        two.clone() * g.clone() * h.clone() + f.clone() * k.clone(),
    );
    let b = companion(spec);
    let c = Mat2::new(
        two.clone() * g.clone(),
        f.clone() * g.clone(),
        f.clone(),
        f.clone() * f.clone() + two.clone() * g.clone(),
    );
    let d = Mat2::new(f.clone().neg(), two.clone() * g, R::from_int(2), f);
    (a, b, c, d)
}

/// R_n by plain iteration: the forward recurrence for n ≥ 0 and the
/// backward step R_{m−1} = (R_{m+1} − f·R_m)·g⁻¹ for n < 0 (so negative
/// indices require g to be a unit).
///
/// O(|n|) ring multiplications. This is the oracle all other evaluators
/// are compared against.
pub fn r_iter<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<R> {
    Ok(r_iter_counted(spec, n)?.0)
}

/// [`r_iter`] plus the number of ring multiplications performed.
pub fn r_iter_counted<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<(R, u64)> {
    let mut muls = 0u64;
    if n >= 0 {
        let mut prev = spec.h().clone();
        if n == 0 {
            return Ok((prev, muls));
        }
        let mut cur = spec.k().clone();
        for _ in 1..n {
            let next = spec.f().clone() * cur.clone() + spec.g().clone() * prev;
            muls += 2;
            prev = cur;
            cur = next;
        }
        Ok((cur, muls))
    } else {
        let g_inv = spec
            .g()
            .inverse()
            .map_err(|_| Error::not_invertible(format!("g = {} in {}", spec.g(), R::ring_name())))?;
        // R_{-1} = g^{-1}(k - f h), then keep stepping down.
        let mut above = spec.k().clone();
        let mut cur = spec.h().clone();
        for _ in 0..n.unsigned_abs() {
            let below = (above - spec.f().clone() * cur.clone()) * g_inv.clone();
            muls += 2;
            above = cur;
            cur = below;
        }
        Ok((cur, muls))
    }
}

/// Multiplication counts of one [`r_fast`] evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FastCost {
    /// 2×2 matrix multiplications inside the binary exponentiation.
    pub matrix_muls: u64,
    /// Total ring multiplications, including the matrix inversion for
    /// negative indices and the final row-vector application.
    pub ring_muls: u64,
}

/// R_n in O(log |n|) ring multiplications via [R_n, R_{n+1}] = [h, k]·Bⁿ.
pub fn r_fast<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<R> {
    Ok(r_fast_counted(spec, n)?.0)
}

/// [`r_fast`] plus its multiplication counts.
pub fn r_fast_counted<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<(R, FastCost)> {
    let b = companion(spec);
    let mut ring_muls = 0u64;
    if n < 0 {
        // pow_counted will invert B; adjugate-over-determinant costs a
        // determinant (2 muls) and a scaling (4 muls).
        ring_muls += 6;
    }
    let (p, matrix_muls) = b.pow_counted(n).map_err(|_| {
        Error::not_invertible(format!("g = {} in {}", spec.g(), R::ring_name()))
    })?;
    ring_muls += 8 * matrix_muls;
    let value = spec.h().clone() * p.a11 + spec.k().clone() * p.a21;
    ring_muls += 2;
    Ok((
        value,
        FastCost {
            matrix_muls,
            ring_muls,
        },
    ))
}

/// The defect A·Bⁿ − (C·R_n + D·g·R_{n−1}); the zero matrix certifies
/// the matrix identity linking the four foundation matrices to the
/// sequence, for any integer n.
pub fn matrix_identity_residual<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<Mat2<R>> {
    let (a, b, c, d) = build_abcd(spec);
    let b_pow = b.pow(n)?;
    let r_n = r_iter(spec, n)?;
    let r_prev = r_iter(spec, n - 1)?;
    let lhs = a.mul_ref(&b_pow);
    let rhs = c.scale(&r_n) + d.scale(&(spec.g().clone() * r_prev));
    Ok(lhs - rhs)
}

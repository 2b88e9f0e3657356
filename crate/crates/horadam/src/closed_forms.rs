//! Closed-form evaluation: the complete case analysis over the
//! discriminant Δ = f² + 4g and the seed invariant q = gh² − k² + fhk,
//! the Binet formula over a formal quadratic extension (exact for every
//! integer index, including negatives and perfect-square discriminants),
//! and the diagonalization of the four foundation matrices.

use crate::engine::{companion, Mat2, RecurrenceSpec};
use crate::error::{Error, Result};
use crate::ring::{QuadExtElem, Rational, Ring};
use serde::Serialize;
use std::fmt;

/// Which closed form applies to a recurrence.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    /// Δ ≠ 0 and q ≠ 0: the determinant formula gives R_n², and the
    /// Binet formula gives R_n.
    NonDegenerate,
    /// Δ = 0 and q ≠ 0: repeated characteristic root,
    /// R_n = (n(2k − fh) + fh)·fⁿ⁻¹ / 2ⁿ.
    DegenerateDiscriminant,
    /// Δ = 0 and q = 0: the previous form collapses to R_n = h(f/2)ⁿ.
    DoublyDegenerate,
    /// Δ ≠ 0 and q = 0: the sequence is geometric, R_n = kⁿ / hⁿ⁻¹.
    Geometric,
}

impl CaseTag {
    pub fn name(self) -> &'static str {
        match self {
            CaseTag::NonDegenerate => "non-degenerate",
            CaseTag::DegenerateDiscriminant => "degenerate-discriminant",
            CaseTag::DoublyDegenerate => "doubly-degenerate",
            CaseTag::Geometric => "geometric",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Computes Δ and q exactly and returns the matching case.
pub fn classify<R: Ring>(spec: &RecurrenceSpec<R>) -> CaseTag {
    match (
        spec.discriminant().is_zero(),
        spec.seed_invariant().is_zero(),
    ) {
        (false, false) => CaseTag::NonDegenerate,
        (true, false) => CaseTag::DegenerateDiscriminant,
        (true, true) => CaseTag::DoublyDegenerate,
        (false, true) => CaseTag::Geometric,
    }
}

/// The characteristic roots α = (f + t)/2, β = (f − t)/2 and the seed
/// coefficients c₁/c₂ = h/2 ± (2k − fh)/(2t), all in the extension with
/// t² = Δ. Returned as (c₁, c₂, α, β).
fn binet_parts(
    spec: &RecurrenceSpec<Rational>,
) -> Result<(QuadExtElem, QuadExtElem, QuadExtElem, QuadExtElem)> {
    let delta = spec.discriminant();
    if delta.is_zero() {
        return Err(Error::DegenerateDiscriminant);
    }
    let lift = |r: &Rational| QuadExtElem::from_rational(r.clone());
    let t = QuadExtElem::sqrt_of(delta)?;
    let half = QuadExtElem::from_rational(Rational::new(1, 2)?);

    let alpha = (lift(spec.f()) + t.clone()) * half.clone();
    let beta = (lift(spec.f()) - t.clone()) * half.clone();

    let spread = lift(&(Rational::from_int(2) * spec.k().clone()
        - spec.f().clone() * spec.h().clone()));
    let half_inv_t = (QuadExtElem::from_int(2) * t).inverse()?;
    let mean = lift(spec.h()) * half;
    let c1 = mean.clone() + spread.clone() * half_inv_t.clone();
    let c2 = mean - spread * half_inv_t;
    Ok((c1, c2, alpha, beta))
}

/// The Binet value before projection: c₁αⁿ + c₂βⁿ in the extension with
/// t² = Δ.
///
/// α and β are units (αβ = −g ≠ 0), so every integer n is valid. The
/// t-component of the result is identically zero; [`r_binet`] projects
/// it away.
pub fn binet_element(spec: &RecurrenceSpec<Rational>, n: i64) -> Result<QuadExtElem> {
    let (c1, c2, alpha, beta) = binet_parts(spec)?;
    Ok(c1 * alpha.pow(n)? + c2 * beta.pow(n)?)
}

/// R_n by the Binet formula, valid for every integer n. Requires Δ ≠ 0;
/// the degenerate case is served by [`r_degenerate`].
pub fn r_binet(spec: &RecurrenceSpec<Rational>, n: i64) -> Result<Rational> {
    let value = binet_element(spec, n)?;
    assert!(
        value.t_part().is_zero(),
        "Binet t-component must cancel exactly"
    );
    Ok(value.scalar_part().clone())
}

/// [`r_binet`] plus the number of extension-ring multiplications spent in
/// the two root powers and the final combination.
pub fn r_binet_counted(spec: &RecurrenceSpec<Rational>, n: i64) -> Result<(Rational, u64)> {
    let (c1, c2, alpha, beta) = binet_parts(spec)?;
    let (alpha_pow, muls_a) = crate::ring::pow_counted(&alpha, n)?;
    let (beta_pow, muls_b) = crate::ring::pow_counted(&beta, n)?;
    let value = c1 * alpha_pow + c2 * beta_pow;
    assert!(value.t_part().is_zero());
    Ok((value.scalar_part().clone(), muls_a + muls_b + 2))
}

/// R_n = (n(2k − fh) + fh)·fⁿ⁻¹ / 2ⁿ for the repeated-root case Δ = 0.
/// When additionally q = 0 this collapses to h·(f/2)ⁿ on its own.
/// Indices n ≤ 0 require f to be a unit.
pub fn r_degenerate<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<R> {
    if !spec.discriminant().is_zero() {
        return Err(Error::WrongCase {
            expected: "degenerate-discriminant",
            actual: classify(spec).name(),
        });
    }
    let fh = spec.f().clone() * spec.h().clone();
    let spread = R::from_int(2) * spec.k().clone() - fh.clone();
    let linear = R::from_int(n) * spread + fh;
    let f_pow = spec.f().pow(n - 1)?;
    let half_pow = R::from_int(2).inverse()?.pow(n)?;
    Ok(linear * f_pow * half_pow)
}

/// R_n = kⁿ / hⁿ⁻¹ for the geometric case Δ ≠ 0, q = 0. When h = 0 the
/// seeds force k = 0 and the sequence is identically zero.
pub fn r_geometric<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<R> {
    let tag = classify(spec);
    if tag != CaseTag::Geometric {
        return Err(Error::WrongCase {
            expected: "geometric",
            actual: tag.name(),
        });
    }
    if spec.h().is_zero() {
        // q = -k² here, so q = 0 means k = 0: the zero sequence.
        return Ok(R::zero());
    }
    Ok(spec.k().pow(n)? * spec.h().pow(1 - n)?)
}

/// The matrix M of the determinant closed form:
/// (1/q)·[[gh² + f²h² + k² − 2fhk, gh(2k − fh)], [h(2k − fh), gh² + k²]].
/// M commutes with the companion matrix B. Requires q to be a unit.
pub fn m_matrix<R: Ring>(spec: &RecurrenceSpec<R>) -> Result<Mat2<R>> {
    let q = spec.seed_invariant();
    let q_inv = q
        .inverse()
        .map_err(|_| Error::not_invertible(format!("seed invariant q = {q}")))?;
    let (f, g, h, k) = (
        spec.f().clone(),
        spec.g().clone(),
        spec.h().clone(),
        spec.k().clone(),
    );
    let spread = R::from_int(2) * k.clone() - f.clone() * h.clone();
    let gh2 = g.clone() * h.clone() * h.clone();
    let m11 = gh2.clone() + f.clone() * f.clone() * h.clone() * h.clone() + k.clone() * k.clone()
        - R::from_int(2) * f * h.clone() * k.clone();
    let m12 = g * h.clone() * spread.clone();
    let m21 = h * spread;
    let m22 = gh2 + k.clone() * k;
    Ok(Mat2::new(m11, m12, m21, m22).scale(&q_inv))
}

/// The companion matrix's partner in the determinant closed form:
/// N = (−g)·B⁻². Its determinant is 1, so every integer power exists.
/// Requires g to be a unit.
pub fn n_matrix<R: Ring>(spec: &RecurrenceSpec<R>) -> Result<Mat2<R>> {
    let b_inv = companion(spec).inverse()?;
    Ok(b_inv.mul_ref(&b_inv).scale(&(-spec.g().clone())))
}

/// R_n², computed as ((−g)ⁿ·q / Δ)·det(M + Nⁿ) with N = (−g)·B⁻², so a
/// single matrix inversion serves every n. The determinant form pins the
/// square only; no sign rule is applied.
pub fn r_squared_det<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<R> {
    let delta = spec.discriminant();
    if delta.is_zero() {
        return Err(Error::WrongCase {
            expected: "non-degenerate",
            actual: classify(spec).name(),
        });
    }
    let delta_inv = delta
        .inverse()
        .map_err(|_| Error::not_invertible(format!("discriminant {delta}")))?;
    let m = m_matrix(spec)?;
    let n_pow = n_matrix(spec)?.pow(n)?;
    let prefactor = (-spec.g().clone()).pow(n)? * spec.seed_invariant() * delta_inv;
    Ok(prefactor * (m + n_pow).det())
}

/// The residuals of the four diagonalization identities.
#[derive(Clone, Debug)]
pub struct DiagResiduals {
    pub a: Mat2<QuadExtElem>,
    pub b: Mat2<QuadExtElem>,
    pub c: Mat2<QuadExtElem>,
    pub d: Mat2<QuadExtElem>,
}

impl DiagResiduals {
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

/// The change-of-basis matrix P = [[1, 1], [(f + t)/2g, (f − t)/2g]] over
/// the extension with t² = Δ.
pub fn transition_matrix(spec: &RecurrenceSpec<Rational>) -> Result<Mat2<QuadExtElem>> {
    let delta = spec.discriminant();
    if delta.is_zero() {
        return Err(Error::DegenerateDiscriminant);
    }
    let t = QuadExtElem::sqrt_of(delta)?;
    let f = QuadExtElem::from_rational(spec.f().clone());
    let inv_2g = QuadExtElem::from_rational(
        (Rational::from_int(2) * spec.g().clone()).inverse()?,
    );
    Ok(Mat2::new(
        QuadExtElem::one(),
        QuadExtElem::one(),
        (f.clone() + t.clone()) * inv_2g.clone(),
        (f - t) * inv_2g,
    ))
}

/// The explicit inverse of [`transition_matrix`]:
/// [[(−f + t)/2t, g/t], [(f + t)/2t, −g/t]].
pub fn transition_matrix_inverse(spec: &RecurrenceSpec<Rational>) -> Result<Mat2<QuadExtElem>> {
    let delta = spec.discriminant();
    if delta.is_zero() {
        return Err(Error::DegenerateDiscriminant);
    }
    let t = QuadExtElem::sqrt_of(delta)?;
    let f = QuadExtElem::from_rational(spec.f().clone());
    let g = QuadExtElem::from_rational(spec.g().clone());
    let inv_t = t.clone().inverse()?;
    let inv_2t = (QuadExtElem::from_int(2) * t.clone()).inverse()?;
    Ok(Mat2::new(
        (t.clone() - f.clone()) * inv_2t.clone(),
        g.clone() * inv_t.clone(),
        (f + t) * inv_2t,
        -(g * inv_t),
    ))
}

/// Conjugates each foundation matrix by P and subtracts its predicted
/// diagonal form:
///
/// * P⁻¹BP = diag((f + t)/2, (f − t)/2)
/// * P⁻¹DP = diag(t, −t)
/// * P⁻¹CP = diag((Δ + ft)/2, (Δ − ft)/2)
/// * P⁻¹AP = diag((hΔ + (2k − fh)t)/2, (hΔ − (2k − fh)t)/2)
///
/// (P's columns are B's eigenvectors; acting with C on the first of them
/// gives 2g + f(f + t)/2 = (Δ + ft)/2, hence the f in C's diagonal.)
/// All four residuals are zero whenever Δ ≠ 0.
pub fn diag_check(spec: &RecurrenceSpec<Rational>) -> Result<DiagResiduals> {
    let delta = spec.discriminant();
    if delta.is_zero() {
        return Err(Error::DegenerateDiscriminant);
    }
    let p = transition_matrix(spec)?;
    let p_inv = transition_matrix_inverse(spec)?;

    let lift = |r: &Rational| QuadExtElem::from_rational(r.clone());
    let t = QuadExtElem::sqrt_of(delta.clone())?;
    let half = QuadExtElem::from_rational(Rational::new(1, 2)?);
    let f = lift(spec.f());
    let d_scalar = lift(&delta);
    let spread = lift(
        &(Rational::from_int(2) * spec.k().clone() - spec.f().clone() * spec.h().clone()),
    );
    let h_delta = lift(spec.h()) * d_scalar.clone();

    let (a, b, c, d) = crate::engine::build_abcd(spec);
    let conjugate =
        |x: &Mat2<Rational>| -> Mat2<QuadExtElem> { p_inv.mul_ref(&x.map(lift)).mul_ref(&p) };

    let diag_b = Mat2::diagonal(
        (f.clone() + t.clone()) * half.clone(),
        (f.clone() - t.clone()) * half.clone(),
    );
    let diag_d = Mat2::diagonal(t.clone(), -t.clone());
    let ft = f * t.clone();
    let diag_c = Mat2::diagonal(
        (d_scalar.clone() + ft.clone()) * half.clone(),
        (d_scalar - ft) * half.clone(),
    );
    let diag_a = Mat2::diagonal(
        (h_delta.clone() + spread.clone() * t.clone()) * half.clone(),
        (h_delta - spread * t) * half,
    );

    Ok(DiagResiduals {
        a: conjugate(&a) - diag_a,
        b: conjugate(&b) - diag_b,
        c: conjugate(&c) - diag_c,
        d: conjugate(&d) - diag_d,
    })
}

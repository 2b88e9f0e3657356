//! Identities between sequence elements, exposed as exact residuals: a
//! zero result certifies the identity, a nonzero result is the witness a
//! property test reports. Solved forms are provided separately where the
//! identity's leading coefficient is a unit.

use crate::engine::{r_fast, r_iter, RecurrenceSpec};
use crate::error::{Error, Result};
use crate::ring::Ring;
use serde::Serialize;

/// The Cassini-type constant k² − gh² − fhk (the negated seed invariant).
fn cassini_constant<R: Ring>(spec: &RecurrenceSpec<R>) -> R {
    -spec.seed_invariant()
}

/// The defect of the Cassini-type identity
/// R_n² − g·R_{n−1}² − f·R_n·R_{n−1} = (k² − gh² − fhk)·(−g)ⁿ⁻¹
/// for any integer n (indices n ≤ 0 require g to be a unit).
pub fn cassini_residual<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<R> {
    let r_n = r_iter(spec, n)?;
    let r_prev = r_iter(spec, n - 1)?;
    let lhs = r_n.clone() * r_n.clone()
        - spec.g().clone() * r_prev.clone() * r_prev.clone()
        - spec.f().clone() * r_n * r_prev;
    let rhs = cassini_constant(spec) * (-spec.g().clone()).pow(n - 1)?;
    Ok(lhs - rhs)
}

/// The partial geometric sum S = Σ_{i=1..n} (k² − gh² − fhk)(−g)^{i−1}.
///
/// Closed forms: (k² − gh² − fhk)·(1 − (−g)ⁿ)/(1 + g) when 1 + g is a
/// unit, and n·(k² − gh² − fhk) when g = −1. Over rings where 1 + g is
/// neither zero nor a unit (e.g. nonconstant polynomial g) the sum is
/// accumulated directly; the three routes agree exactly.
pub fn s_term<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<R> {
    if n < 1 {
        return Err(Error::IndexOutOfDomain {
            operation: "s_term",
            index: n,
        });
    }
    let constant = cassini_constant(spec);
    let neg_g = -spec.g().clone();
    let one_plus_g = R::one() + spec.g().clone();
    if one_plus_g.is_zero() {
        return Ok(R::from_int(n) * constant);
    }
    if one_plus_g.is_unit() {
        let ratio = (R::one() - neg_g.pow(n)?) * one_plus_g.inverse()?;
        return Ok(constant * ratio);
    }
    let mut geometric = R::zero();
    let mut term = R::one();
    for _ in 0..n {
        geometric = geometric + term.clone();
        term = term * neg_g.clone();
    }
    Ok(constant * geometric)
}

/// Both sums of the summation identities, accumulated directly:
/// (Σ_{i=1..n} R_i², Σ_{i=1..n} R_i·R_{i−1}).
fn direct_sums<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<(R, R)> {
    if n < 1 {
        return Err(Error::IndexOutOfDomain {
            operation: "summation identities",
            index: n,
        });
    }
    let mut prev = spec.h().clone();
    let mut cur = spec.k().clone();
    let mut squares = R::zero();
    let mut products = R::zero();
    for _ in 0..n {
        squares = squares + cur.clone() * cur.clone();
        products = products + cur.clone() * prev.clone();
        let next = spec.f().clone() * cur.clone() + spec.g().clone() * prev;
        prev = cur;
        cur = next;
    }
    Ok((squares, products))
}

/// Residuals of the two summation identities, in the universally valid
/// coefficient-times-sum form:
///
/// * (f² − g² + 2g − 1)·Σ R_i² = (R_{n+1}² − k²) − g²(R_n² − h²) + 2Sg
/// * f(f² − g² + 2g − 1)·Σ R_iR_{i−1}
///   = (1 − g)(R_{n+1}² − k²) + g(g − 1 + f²)(R_n² − h²) + S(1 − f² − g²)
///
/// Both residuals are zero for every valid spec and n ≥ 1, including
/// specs where the common coefficient vanishes.
pub fn sum_identities_residual<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<(R, R)> {
    let (squares, products) = direct_sums(spec, n)?;
    let s = s_term(spec, n)?;
    let coefficient = sum_coefficient(spec);
    let (rhs_squares, rhs_products) = sum_rhs(spec, n, &s)?;

    let res_squares = coefficient.clone() * squares - rhs_squares;
    let res_products = spec.f().clone() * coefficient * products - rhs_products;
    Ok((res_squares, res_products))
}

/// f² − g² + 2g − 1, the coefficient both summation identities share.
fn sum_coefficient<R: Ring>(spec: &RecurrenceSpec<R>) -> R {
    spec.f().clone() * spec.f().clone() - spec.g().clone() * spec.g().clone()
        + R::from_int(2) * spec.g().clone()
        - R::one()
}

/// The two right-hand sides, which need only R_n, R_{n+1} and S.
fn sum_rhs<R: Ring>(spec: &RecurrenceSpec<R>, n: i64, s: &R) -> Result<(R, R)> {
    let r_n = r_fast(spec, n)?;
    let r_next = r_fast(spec, n + 1)?;
    let g = spec.g().clone();
    let f = spec.f().clone();
    let top = r_next.clone() * r_next - spec.k().clone() * spec.k().clone();
    let mid = r_n.clone() * r_n - spec.h().clone() * spec.h().clone();

    let rhs_squares = top.clone() - g.clone() * g.clone() * mid.clone()
        + R::from_int(2) * s.clone() * g.clone();
    let rhs_products = (R::one() - g.clone()) * top
        + g.clone() * (g.clone() - R::one() + f.clone() * f.clone()) * mid
        + s.clone() * (R::one() - f.clone() * f - g.clone() * g);
    Ok((rhs_squares, rhs_products))
}

/// The two sums recovered from the closed right-hand sides:
/// (Σ_{i=1..n} R_i², Σ_{i=1..n} R_i·R_{i−1}).
///
/// Requires the shared coefficient f² − g² + 2g − 1 (and, for the second
/// sum, f) to be a unit. Sequences where it vanishes (the Jacobsthal
/// family among them) are served by the residual form instead.
pub fn solve_sums<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<(R, R)> {
    let coefficient = sum_coefficient(spec);
    let coeff_inv = coefficient.inverse().map_err(|_| {
        Error::not_invertible(format!("coefficient f^2 - g^2 + 2g - 1 = {coefficient}"))
    })?;
    let f_inv = spec
        .f()
        .inverse()
        .map_err(|_| Error::not_invertible(format!("f = {}", spec.f())))?;
    let s = s_term(spec, n)?;
    let (rhs_squares, rhs_products) = sum_rhs(spec, n, &s)?;
    Ok((
        rhs_squares * coeff_inv.clone(),
        rhs_products * coeff_inv * f_inv,
    ))
}

/// One summation check in reportable form.
#[derive(Clone, Debug, Serialize)]
pub struct SumReport<R: Ring> {
    pub n: i64,
    pub sum_of_squares: R,
    pub sum_of_products: R,
    pub s_value: R,
    pub residual_squares: R,
    pub residual_products: R,
}

impl<R: Ring> SumReport<R> {
    pub fn is_zero(&self) -> bool {
        self.residual_squares.is_zero() && self.residual_products.is_zero()
    }
}

/// Runs both summation identities at index n and packages sums, S and
/// residuals together.
pub fn sum_report<R: Ring>(spec: &RecurrenceSpec<R>, n: i64) -> Result<SumReport<R>> {
    let (sum_of_squares, sum_of_products) = direct_sums(spec, n)?;
    let s_value = s_term(spec, n)?;
    let (residual_squares, residual_products) = sum_identities_residual(spec, n)?;
    Ok(SumReport {
        n,
        sum_of_squares,
        sum_of_products,
        s_value,
        residual_squares,
        residual_products,
    })
}

/// The defect of the addition identity, for any integers i and n
/// (negative indices require g to be a unit):
///
/// (k² − fkh − gh²)R_{i+n} + (f²h − fk + gh)R_iR_n + hg²R_{i−1}R_{n−1}
/// + (fh − k)g(R_nR_{i−1} + R_iR_{n−1}) = 0
pub fn addition_residual<R: Ring>(spec: &RecurrenceSpec<R>, i: i64, n: i64) -> Result<R> {
    let (f, g, h, k) = (
        spec.f().clone(),
        spec.g().clone(),
        spec.h().clone(),
        spec.k().clone(),
    );
    let r_i = r_iter(spec, i)?;
    let r_i_prev = r_iter(spec, i - 1)?;
    let r_n = r_iter(spec, n)?;
    let r_n_prev = r_iter(spec, n - 1)?;
    let r_sum = r_iter(spec, i + n)?;

    let lead = cassini_constant(spec);
    let c_prod = f.clone() * f.clone() * h.clone() - f.clone() * k.clone() + g.clone() * h.clone();
    let c_prev = h.clone() * g.clone() * g.clone();
    let c_mixed = (f * h - k) * g;

    Ok(lead * r_sum
        + c_prod * r_i.clone() * r_n.clone()
        + c_prev * r_i_prev.clone() * r_n_prev.clone()
        + c_mixed * (r_n * r_i_prev + r_i * r_n_prev))
}

/// R_{i+n} recovered from the addition identity, given the four flanking
/// values R_i, R_{i−1}, R_n, R_{n−1}. With i = n this is a doubling step.
///
/// Requires the leading coefficient k² − fkh − gh² to be a unit; it
/// vanishes exactly for geometric-case specs.
pub fn r_add_compose<R: Ring>(spec: &RecurrenceSpec<R>, i: i64, n: i64) -> Result<R> {
    let lead = cassini_constant(spec);
    let lead_inv = lead.inverse().map_err(|_| {
        Error::not_invertible(format!("coefficient k^2 - fkh - gh^2 = {lead}"))
    })?;
    let (f, g, h, k) = (
        spec.f().clone(),
        spec.g().clone(),
        spec.h().clone(),
        spec.k().clone(),
    );
    let r_i = r_fast(spec, i)?;
    let r_i_prev = r_fast(spec, i - 1)?;
    let r_n = r_fast(spec, n)?;
    let r_n_prev = r_fast(spec, n - 1)?;

    let c_prod = f.clone() * f.clone() * h.clone() - f.clone() * k.clone() + g.clone() * h.clone();
    let c_prev = h.clone() * g.clone() * g.clone();
    let c_mixed = (f * h - k) * g;
    let combination = c_prod * r_i.clone() * r_n.clone()
        + c_prev * r_i_prev.clone() * r_n_prev.clone()
        + c_mixed * (r_n * r_i_prev + r_i * r_n_prev);
    Ok(-(combination * lead_inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Poly, Rational};

    fn rspec(f: i64, g: i64, h: i64, k: i64) -> RecurrenceSpec<Rational> {
        RecurrenceSpec::new(
            Rational::integer(f),
            Rational::integer(g),
            Rational::integer(h),
            Rational::integer(k),
        )
        .unwrap()
    }

    fn fib() -> RecurrenceSpec<Rational> {
        rspec(1, 1, 0, 1)
    }

    fn int(n: i64) -> Rational {
        Rational::integer(n)
    }

    #[test]
    fn cassini_anchors() {
        // Fibonacci n = 3: 4 - 1 - 2 = 1 = (-1)².
        let f = fib();
        let lhs = |spec: &RecurrenceSpec<Rational>, n: i64| {
            let rn = r_iter(spec, n).unwrap();
            let rp = r_iter(spec, n - 1).unwrap();
            rn.clone() * rn.clone()
                - spec.g().clone() * rp.clone() * rp.clone()
                - spec.f().clone() * rn * rp
        };
        assert_eq!(lhs(&f, 3), int(1));
        assert!(cassini_residual(&f, 3).unwrap().is_zero());

        // Pell n = 4: 144 - 25 - 120 = -1.
        let pell = rspec(2, 1, 0, 1);
        assert_eq!(lhs(&pell, 4), int(-1));
        assert!(cassini_residual(&pell, 4).unwrap().is_zero());
    }

    #[test]
    fn cassini_residual_vanishes_at_one_by_construction() {
        for spec in [fib(), rspec(5, -3, 2, 7), rspec(-2, 9, -4, 1)] {
            assert!(cassini_residual(&spec, 1).unwrap().is_zero(), "{spec}");
        }
    }

    #[test]
    fn cassini_residual_vanishes_on_a_sweep() {
        for spec in [fib(), rspec(2, 1, 0, 1), rspec(3, -2, 1, 4)] {
            for n in -10..=10 {
                assert!(cassini_residual(&spec, n).unwrap().is_zero(), "{spec} n={n}");
            }
        }
    }

    #[test]
    fn s_term_branches() {
        assert_eq!(s_term(&fib(), 4).unwrap(), int(0));
        assert_eq!(s_term(&fib(), 3).unwrap(), int(1));
        // g = -1 branch: 3·(1 - 0 - 0) = 3.
        assert_eq!(s_term(&rspec(3, -1, 0, 1), 3).unwrap(), int(3));
        assert!(s_term(&fib(), 0).is_err());
    }

    #[test]
    fn s_term_matches_direct_geometric_sum() {
        for spec in [fib(), rspec(3, -1, 0, 1), rspec(1, 2, 0, 1), rspec(2, -5, 3, 1)] {
            let constant = -spec.seed_invariant();
            for n in 1..=12 {
                let mut direct = Rational::zero();
                for i in 1..=n {
                    direct = direct
                        + constant.clone() * (-spec.g().clone()).pow(i - 1).unwrap();
                }
                assert_eq!(s_term(&spec, n).unwrap(), direct, "{spec} n={n}");
            }
        }
    }

    #[test]
    fn s_term_accumulates_when_one_plus_g_is_not_a_unit() {
        // Jacobsthal polynomials: 1 + 2x is neither zero nor a unit in
        // Q[x], so the closed form is unavailable; the accumulated sum
        // at n = 3 is -2x(1 - 2x + 4x²).
        let spec = RecurrenceSpec::new(
            Poly::one(),
            Poly::from_int(2) * Poly::x(),
            Poly::one(),
            Poly::one(),
        )
        .unwrap();
        let s = s_term(&spec, 3).unwrap();
        assert_eq!(s.to_string(), "-8*x^3 + 4*x^2 - 2*x");
        for n in 1..=5 {
            let (r1, r2) = sum_identities_residual(&spec, n).unwrap();
            assert!(r1.is_zero() && r2.is_zero(), "n={n}");
        }
    }

    #[test]
    fn summation_identities_anchor_values() {
        // Pell n = 3: 4·30 = 120 = (144 − 1) − 25 + 2·1.
        let pell = rspec(2, 1, 0, 1);
        let report = sum_report(&pell, 3).unwrap();
        assert_eq!(report.sum_of_squares, int(30));
        assert_eq!(report.sum_of_products, int(12));
        assert_eq!(report.s_value, int(1));
        assert!(report.is_zero());
        let coefficient = int(4); // f² − g² + 2g − 1 for (2, 1, ·, ·)
        assert_eq!(coefficient * report.sum_of_squares.clone(), int(120));
        let r4 = r_iter(&pell, 4).unwrap();
        let r3 = r_iter(&pell, 3).unwrap();
        assert_eq!(
            r4.clone() * r4 - int(1) - (r3.clone() * r3 - int(0)) + int(2) * report.s_value,
            int(120)
        );

        // Fibonacci n = 4: Σ F_i² = 15, Σ F_i F_{i−1} = 9.
        let report = sum_report(&fib(), 4).unwrap();
        assert_eq!(report.sum_of_squares, int(15));
        assert_eq!(report.sum_of_products, int(9));
        assert!(report.is_zero());
    }

    #[test]
    fn summation_identities_survive_vanishing_coefficient() {
        // Jacobsthal: f² − g² + 2g − 1 = 1 − 4 + 4 − 1 = 0, and at n = 1
        // the first right-hand side is 0 − 4 + 4 = 0 on its own.
        let jacobsthal = rspec(1, 2, 0, 1);
        let s = s_term(&jacobsthal, 1).unwrap();
        assert_eq!(s, int(1));
        let (r1, r2) = sum_identities_residual(&jacobsthal, 1).unwrap();
        assert!(r1.is_zero() && r2.is_zero());
        for n in 1..=20 {
            let (r1, r2) = sum_identities_residual(&jacobsthal, n).unwrap();
            assert!(r1.is_zero() && r2.is_zero(), "n={n}");
        }
    }

    #[test]
    fn solved_sums_match_direct_summation() {
        assert_eq!(solve_sums(&fib(), 4).unwrap(), (int(15), int(9)));
        let pell = rspec(2, 1, 0, 1);
        assert_eq!(solve_sums(&pell, 3).unwrap(), (int(30), int(12)));
        for spec in [fib(), pell, rspec(3, -1, 0, 1), rspec(-4, 3, 2, 5)] {
            for n in 1..=15 {
                assert_eq!(
                    solve_sums(&spec, n).unwrap(),
                    direct_sums(&spec, n).unwrap(),
                    "{spec} n={n}"
                );
            }
        }
    }

    #[test]
    fn solved_sums_reject_vanishing_coefficient() {
        let err = solve_sums(&rspec(1, 2, 0, 1), 5).unwrap_err();
        match err {
            Error::NotInvertible { what } => assert!(what.contains("f^2 - g^2 + 2g - 1")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn addition_identity_anchors() {
        // Fibonacci i = n = 2 reduces to F_4 = F_2F_2 + 2F_2F_1 = 3.
        assert!(addition_residual(&fib(), 2, 2).unwrap().is_zero());
        assert_eq!(r_iter(&fib(), 4).unwrap(), int(3));
        assert!(addition_residual(&fib(), -1, 3).unwrap().is_zero());
        assert!(addition_residual(&rspec(1, 1, 2, 1), 1, 1).unwrap().is_zero());
    }

    #[test]
    fn addition_residual_vanishes_on_a_sweep() {
        for spec in [fib(), rspec(2, 1, 2, 2), rspec(3, -2, 1, 4)] {
            for i in -8..=8 {
                for n in -8..=8 {
                    assert!(
                        addition_residual(&spec, i, n).unwrap().is_zero(),
                        "{spec} i={i} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn composition_recovers_the_shifted_element() {
        assert_eq!(r_add_compose(&fib(), 5, 5).unwrap(), int(55));
        assert_eq!(r_add_compose(&fib(), 2, 2).unwrap(), int(3));
        for spec in [fib(), rspec(2, 1, 2, 2)] {
            for n in -6..=6 {
                assert_eq!(
                    r_add_compose(&spec, n, n).unwrap(),
                    r_fast(&spec, 2 * n).unwrap(),
                    "{spec} n={n}"
                );
            }
        }
    }

    #[test]
    fn composition_rejects_geometric_specs() {
        // (1, 2, 1, 2): k² − fkh − gh² = 4 − 2 − 2 = 0.
        let err = r_add_compose(&rspec(1, 2, 1, 2), 3, 4).unwrap_err();
        assert!(matches!(err, Error::NotInvertible { .. }));
    }

    #[test]
    fn addition_identity_holds_for_fibonacci_polynomials() {
        let spec = RecurrenceSpec::new(Poly::x(), Poly::one(), Poly::zero(), Poly::one()).unwrap();
        for i in 1..=5 {
            for n in 1..=5 {
                assert!(
                    addition_residual(&spec, i, n).unwrap().is_zero(),
                    "i={i} n={n}"
                );
            }
        }
    }
}

//! Seeded algebraic-law sweeps over the ring types and the engine,
//! at the population sizes the library is specified to sustain.

use horadam::closed_forms::m_matrix;
use horadam::engine::{build_abcd, companion, matrix_identity_residual, r_fast, r_iter, RecurrenceSpec};
use horadam::ring::{Poly, QuadExtElem, Rational, Ring};
use horadam::sampler::{random_nondegenerate_spec, random_rational, random_spec, SplitMix64};

fn random_poly(rng: &mut SplitMix64) -> Poly {
    let degree = rng.int_in(0, 4);
    let coeffs = (0..=degree)
        .map(|_| random_rational(rng, true))
        .collect::<Vec<_>>();
    Poly::new(coeffs)
}

#[test]
fn rational_ring_laws_hold_on_200_samples() {
    let mut rng = SplitMix64::new(2024);
    for _ in 0..200 {
        let x = random_rational(&mut rng, true);
        let y = random_rational(&mut rng, true);
        let z = random_rational(&mut rng, true);
        assert_eq!(
            (x.clone() + y.clone()) + z.clone(),
            x.clone() + (y.clone() + z.clone())
        );
        assert_eq!(
            x.clone() * (y.clone() + z.clone()),
            x.clone() * y.clone() + x.clone() * z.clone()
        );
        if !x.is_zero() {
            assert_eq!(x.clone() * x.inverse().unwrap(), Rational::one());
        }
    }
}

#[test]
fn quadratic_extension_laws_hold_on_200_samples() {
    let mut rng = SplitMix64::new(2025);
    let fixed = [
        Rational::integer(5),
        Rational::integer(-4),
        Rational::integer(9),
    ];
    for trial in 0..200u64 {
        let delta = if (trial as usize) < fixed.len() * 20 {
            fixed[trial as usize % fixed.len()].clone()
        } else {
            random_rational(&mut rng, false)
        };
        let elem = |rng: &mut SplitMix64| {
            QuadExtElem::new(
                random_rational(rng, true),
                random_rational(rng, true),
                delta.clone(),
            )
            .unwrap()
        };
        let x = elem(&mut rng);
        let y = elem(&mut rng);
        let z = elem(&mut rng);
        assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        assert_eq!(
            (x.clone() * y.clone()) * z.clone(),
            x.clone() * (y.clone() * z.clone())
        );
        // (a + bt)(a - bt) = a² - b²Δ with no t-component.
        let norm_product = x.clone() * x.conjugate();
        assert!(norm_product.t_part().is_zero());
        assert_eq!(norm_product.scalar_part(), &x.norm());
    }
}

#[test]
fn polynomial_degree_and_evaluation_laws_hold_on_100_pairs() {
    let mut rng = SplitMix64::new(2026);
    let samples = [
        Rational::integer(0),
        Rational::integer(1),
        Rational::integer(-2),
        Rational::new(1, 2).unwrap(),
        Rational::new(-7, 3).unwrap(),
    ];
    for _ in 0..100 {
        let p = random_poly(&mut rng);
        let q = random_poly(&mut rng);
        let product = p.clone() * q.clone();
        match (p.degree(), q.degree()) {
            (Some(dp), Some(dq)) => assert_eq!(product.degree(), Some(dp + dq)),
            _ => assert!(product.is_zero()),
        }
        for r in &samples {
            assert_eq!(product.eval(r), p.eval(r) * q.eval(r));
        }
    }
}

#[test]
fn power_is_additive_for_units() {
    let mut rng = SplitMix64::new(2027);
    for _ in 0..25 {
        let x = random_rational(&mut rng, false);
        for m in -10..=10 {
            for n in -10..=10 {
                assert_eq!(
                    x.pow(m + n).unwrap(),
                    x.pow(m).unwrap() * x.pow(n).unwrap(),
                    "x={x} m={m} n={n}"
                );
            }
        }
    }
}

#[test]
fn evaluators_agree_and_matrix_identity_holds_on_100_specs() {
    let mut rng = SplitMix64::new(2028);
    for _ in 0..100 {
        let spec = random_spec(&mut rng);
        for n in -25..=25 {
            assert_eq!(
                r_fast(&spec, n).unwrap(),
                r_iter(&spec, n).unwrap(),
                "{spec} n={n}"
            );
        }
        for n in -15..=15 {
            assert!(matrix_identity_residual(&spec, n).unwrap().is_zero(), "{spec} n={n}");
        }
    }
}

#[test]
fn companion_determinant_law_on_random_specs() {
    let mut rng = SplitMix64::new(2029);
    for _ in 0..20 {
        let spec = random_spec(&mut rng);
        let b = companion(&spec);
        for n in -10..=10 {
            assert_eq!(
                b.pow(n).unwrap().det(),
                (-spec.g().clone()).pow(n).unwrap(),
                "{spec} n={n}"
            );
        }
    }
}

#[test]
fn determinant_of_a_factors_on_100_specs() {
    let mut rng = SplitMix64::new(2030);
    for _ in 0..100 {
        let spec = random_spec(&mut rng);
        let (a, _, _, _) = build_abcd(&spec);
        assert_eq!(a.det(), spec.discriminant() * spec.seed_invariant(), "{spec}");
    }
}

#[test]
fn m_matrix_commutes_with_companion_on_100_specs() {
    let mut rng = SplitMix64::new(2031);
    for _ in 0..100 {
        let spec = random_nondegenerate_spec(&mut rng);
        let m = m_matrix(&spec).unwrap();
        let b = companion(&spec);
        assert_eq!(m.mul_ref(&b), b.mul_ref(&m), "{spec}");
    }
}

#[test]
fn backward_and_forward_iteration_are_inverse_walks() {
    let mut rng = SplitMix64::new(2032);
    for _ in 0..50 {
        let spec = random_spec(&mut rng);
        // Walking n steps forward from R_{-n} must return to R_0 = h.
        for n in 1..=10 {
            let far = r_iter(&spec, -n).unwrap();
            let near = r_iter(&spec, -n + 1).unwrap();
            let shifted = RecurrenceSpec::new(
                spec.f().clone(),
                spec.g().clone(),
                far,
                near,
            )
            .unwrap();
            assert_eq!(r_iter(&shifted, n).unwrap(), spec.h().clone(), "{spec} n={n}");
        }
    }
}

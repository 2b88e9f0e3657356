//! Eleven classical sequences with their determinant closed formulas.
//!
//! Each entry stores its defining parameters (f, g, h, k) and the printed
//! formula data: the matrix pair (M, N), kept as polynomial matrices over
//! a polynomial denominator so that entries like 1/(2x) stay exact, and
//! the prefactor cⁿ⁺ᵉ·u/v of the radicand. The machine-checkable form of
//! each formula is `radicand(n) = R_n²`, verified against the iterative
//! oracle; square roots themselves are never taken.
//!
//! Parameters follow the source tables verbatim; in particular the
//! Jacobsthal polynomials are seeded with h = 1, k = 1, not the common
//! convention J_0(x) = 0, J_1(x) = 1, so they are their own family here.

use crate::engine::{r_iter, Mat2, RecurrenceSpec};
use crate::error::{Error, Result};
use crate::ring::{Poly, Rational, Ring};

/// One catalog sequence: name, parameters and printed formula.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    name: &'static str,
    symbolic: bool,
    spec: RecurrenceSpec<Poly>,
    /// Printed radicand: (base)ⁿ⁺ˢʰⁱᶠᵗ · num/den · det(M + Nⁿ).
    prefactor_base: Poly,
    prefactor_shift: i64,
    prefactor_num: Poly,
    prefactor_den: Poly,
    /// M and N as polynomial matrices over a common polynomial denominator.
    m_num: Mat2<Poly>,
    m_den: Poly,
    n_num: Mat2<Poly>,
    n_den: Poly,
    formula: &'static str,
}

impl CatalogEntry {
    pub fn name(&self) -> &'static str {
        self.name
    }

    /// Whether f, g, h, k involve the indeterminate x.
    pub fn is_symbolic(&self) -> bool {
        self.symbolic
    }

    /// The parameters over the polynomial ring (constants when numeric).
    pub fn poly_spec(&self) -> &RecurrenceSpec<Poly> {
        &self.spec
    }

    /// A human-readable rendering of the printed closed formula.
    pub fn formula(&self) -> &'static str {
        self.formula
    }

    /// The parameters as rationals; `None` for symbolic entries.
    pub fn rational_spec(&self) -> Option<RecurrenceSpec<Rational>> {
        if self.symbolic {
            return None;
        }
        self.spec_at(&Rational::zero()).ok()
    }

    /// The parameters evaluated at a sample point.
    pub fn spec_at(&self, x: &Rational) -> Result<RecurrenceSpec<Rational>> {
        RecurrenceSpec::new(
            self.spec.f().eval(x),
            self.spec.g().eval(x),
            self.spec.h().eval(x),
            self.spec.k().eval(x),
        )
    }

    /// The spec the oracle runs on: numeric entries directly, symbolic
    /// entries at the required sample point.
    pub fn evaluated_spec(&self, sample: Option<&Rational>) -> Result<RecurrenceSpec<Rational>> {
        self.spec_at(&self.sample_point(sample)?)
    }

    /// The printed matrices M and N, evaluated. Numeric entries ignore
    /// the sample point; symbolic entries require one that keeps the
    /// printed denominators nonzero.
    pub fn printed_matrices(
        &self,
        sample: Option<&Rational>,
    ) -> Result<(Mat2<Rational>, Mat2<Rational>)> {
        let x = self.sample_point(sample)?;
        Ok((
            eval_matrix(&self.m_num, &self.m_den, &x)?,
            eval_matrix(&self.n_num, &self.n_den, &x)?,
        ))
    }

    /// The value under the printed square root:
    /// (base)ⁿ⁺ˢ·(num/den)·det(M + Nⁿ), exactly.
    pub fn radicand(&self, n: i64, sample: Option<&Rational>) -> Result<Rational> {
        let x = self.sample_point(sample)?;
        let (m, n_mat) = self.printed_matrices(Some(&x))?;
        let base = self.prefactor_base.eval(&x);
        let num = self.prefactor_num.eval(&x);
        let den = self.prefactor_den.eval(&x);
        let prefactor = base.pow(n + self.prefactor_shift)? * num * den.inverse()?;
        Ok(prefactor * (m + n_mat.pow(n)?).det())
    }

    fn sample_point(&self, sample: Option<&Rational>) -> Result<Rational> {
        match (self.symbolic, sample) {
            (true, Some(x)) => Ok(x.clone()),
            (true, None) => Err(Error::SamplePointRequired {
                name: self.name.to_string(),
            }),
            // Numeric entries are constant in x; evaluate at 0.
            (false, _) => Ok(Rational::zero()),
        }
    }
}

fn eval_matrix(num: &Mat2<Poly>, den: &Poly, x: &Rational) -> Result<Mat2<Rational>> {
    let den_at = den.eval(x);
    let den_inv = den_at
        .inverse()
        .map_err(|_| Error::not_invertible(format!("printed denominator {den} at x = {x}")))?;
    Ok(num.map(|p| p.eval(x)).scale(&den_inv))
}

/// All eleven entries, in source order.
pub fn entries() -> Vec<CatalogEntry> {
    fn c(n: i64) -> Poly {
        Poly::from_int(n)
    }
    fn cr(num: i64, den: i64) -> Poly {
        Poly::constant(Rational::new(num, den).expect("nonzero denominator"))
    }
    // c0 + c1·x + c2·x²
    fn p(c0: i64, c1: i64, c2: i64) -> Poly {
        Poly::new(vec![
            Rational::integer(c0),
            Rational::integer(c1),
            Rational::integer(c2),
        ])
    }
    let spec = |f: Poly, g: Poly, h: Poly, k: Poly| {
        RecurrenceSpec::new(f, g, h, k).expect("catalog coefficients are nonzero")
    };
    let minus_identity = Mat2::new(c(-1), c(0), c(0), c(-1));
    // N for the f = x, g = 1 polynomial families.
    let n_fib_poly = Mat2::new(p(-1, 0, -1), p(0, 1, 0), p(0, 1, 0), c(-1));
    // N·(2x) for the g = 2x Jacobsthal polynomial families.
    let n_jac_poly = Mat2::new(p(-1, -2, 0), p(0, 2, 0), c(1), p(0, -2, 0));
    // N for the numeric Jacobsthal family (g = 2).
    let n_jac = Mat2::new(cr(-3, 2), c(1), cr(1, 2), c(-1));
    // N for the Pell family (f = 2, g = 1).
    let n_pell = Mat2::new(c(-5), c(2), c(2), c(-1));

    vec![
        CatalogEntry {
            name: "fibonacci_poly",
            symbolic: true,
            spec: spec(Poly::x(), c(1), c(0), c(1)),
            prefactor_base: c(-1),
            prefactor_shift: 1,
            prefactor_num: c(1),
            prefactor_den: p(4, 0, 1),
            m_num: minus_identity.clone(),
            m_den: c(1),
            n_num: n_fib_poly.clone(),
            n_den: c(1),
            formula: "f_n(x) = sqrt((-1)^(n+1)/(4+x^2) * det(M + N^n))",
        },
        CatalogEntry {
            name: "fibonacci",
            symbolic: false,
            spec: spec(c(1), c(1), c(0), c(1)),
            prefactor_base: c(-1),
            prefactor_shift: 1,
            prefactor_num: c(1),
            prefactor_den: c(5),
            m_num: minus_identity.clone(),
            m_den: c(1),
            n_num: Mat2::new(c(-2), c(1), c(1), c(-1)),
            n_den: c(1),
            formula: "F_n = sqrt((-1)^(n+1)/5 * det(M + N^n))",
        },
        CatalogEntry {
            name: "lucas_poly",
            symbolic: true,
            spec: spec(Poly::x(), c(1), c(2), Poly::x()),
            prefactor_base: c(-1),
            prefactor_shift: 0,
            prefactor_num: c(1),
            prefactor_den: c(1),
            m_num: Mat2::identity(),
            m_den: c(1),
            n_num: n_fib_poly,
            n_den: c(1),
            formula: "l_n(x) = sqrt((-1)^n * det(M + N^n))",
        },
        CatalogEntry {
            name: "lucas",
            symbolic: false,
            spec: spec(c(1), c(1), c(2), c(1)),
            prefactor_base: c(-1),
            prefactor_shift: 0,
            prefactor_num: c(1),
            prefactor_den: c(1),
            m_num: Mat2::identity(),
            m_den: c(1),
            n_num: Mat2::new(c(-2), c(1), c(1), c(-1)),
            n_den: c(1),
            formula: "L_n = sqrt((-1)^n * det(M + N^n))",
        },
        CatalogEntry {
            name: "jacobsthal_poly",
            symbolic: true,
            spec: spec(c(1), p(0, 2, 0), c(1), c(1)),
            prefactor_base: p(0, -2, 0),
            prefactor_shift: 0,
            prefactor_num: p(0, 2, 0),
            prefactor_den: p(1, 8, 0),
            m_num: Mat2::new(p(0, 2, 0), p(0, 2, 0), c(1), p(1, 2, 0)),
            m_den: p(0, 2, 0),
            n_num: n_jac_poly.clone(),
            n_den: p(0, 2, 0),
            formula: "J_n(x) = sqrt((-1)^n (2x)^(n+1)/(1+8x) * det(M + N^n))",
        },
        CatalogEntry {
            name: "jacobsthal",
            symbolic: false,
            spec: spec(c(1), c(2), c(0), c(1)),
            prefactor_base: c(-2),
            prefactor_shift: 0,
            prefactor_num: c(1),
            prefactor_den: c(-9),
            m_num: minus_identity,
            m_den: c(1),
            n_num: n_jac.clone(),
            n_den: c(1),
            formula: "J_n = sqrt((-2)^n/(-9) * det(M + N^n))",
        },
        CatalogEntry {
            name: "jacobsthal_lucas_poly",
            symbolic: true,
            spec: spec(c(1), p(0, 2, 0), c(2), c(1)),
            prefactor_base: p(0, -2, 0),
            prefactor_shift: 0,
            prefactor_num: c(1),
            prefactor_den: c(1),
            m_num: Mat2::identity(),
            m_den: c(1),
            n_num: n_jac_poly,
            n_den: p(0, 2, 0),
            formula: "j_n(x) = sqrt((-2x)^n * det(M + N^n))",
        },
        CatalogEntry {
            name: "jacobsthal_lucas",
            symbolic: false,
            spec: spec(c(1), c(2), c(2), c(1)),
            prefactor_base: c(-2),
            prefactor_shift: 0,
            prefactor_num: c(1),
            prefactor_den: c(1),
            m_num: Mat2::identity(),
            m_den: c(1),
            n_num: n_jac,
            n_den: c(1),
            formula: "j_n = sqrt((-2)^n * det(M + N^n))",
        },
        CatalogEntry {
            name: "pell_lucas",
            symbolic: false,
            spec: spec(c(2), c(1), c(2), c(2)),
            prefactor_base: c(-1),
            prefactor_shift: 0,
            prefactor_num: c(1),
            prefactor_den: c(1),
            m_num: Mat2::identity(),
            m_den: c(1),
            n_num: n_pell.clone(),
            n_den: c(1),
            formula: "Q_n = sqrt((-1)^n * det(M + N^n))",
        },
        CatalogEntry {
            name: "pell",
            symbolic: false,
            spec: spec(c(2), c(1), c(0), c(1)),
            prefactor_base: c(-1),
            prefactor_shift: 1,
            prefactor_num: c(1),
            prefactor_den: c(8),
            m_num: Mat2::new(c(-1), c(0), c(0), c(-1)),
            m_den: c(1),
            n_num: n_pell,
            n_den: c(1),
            formula: "P_n = sqrt((-1)^(n+1)/8 * det(M + N^n))",
        },
        CatalogEntry {
            name: "tchebychev_t",
            symbolic: true,
            spec: spec(p(0, 2, 0), c(-1), c(1), Poly::x()),
            prefactor_base: c(1),
            prefactor_shift: 0,
            prefactor_num: c(1),
            prefactor_den: c(4),
            m_num: Mat2::identity(),
            m_den: c(1),
            n_num: Mat2::new(p(-1, 0, 4), p(0, 2, 0), p(0, -2, 0), c(-1)),
            n_den: c(1),
            formula: "T_n(x) = sqrt(1/4 * det(M + N^n))",
        },
    ]
}

/// Looks a sequence up by name.
pub fn get_sequence(name: &str) -> Result<CatalogEntry> {
    let all = entries();
    all.iter()
        .find(|e| e.name == name)
        .cloned()
        .ok_or_else(|| Error::UnknownSequence {
            name: name.to_string(),
            valid: all
                .iter()
                .map(|e| e.name)
                .collect::<Vec<_>>()
                .join(", "),
        })
}

/// The machine-checkable form of a printed formula: the pair
/// (value under the square root, oracle term squared). The two components
/// are equal for every valid index and sample point.
pub fn formula_check(
    name: &str,
    n: i64,
    sample: Option<&Rational>,
) -> Result<(Rational, Rational)> {
    let entry = get_sequence(name)?;
    let radicand = entry.radicand(n, sample)?;
    let term = r_iter(&entry.evaluated_spec(sample)?, n)?;
    Ok((radicand, term.clone() * term))
}

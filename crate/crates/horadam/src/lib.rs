//! Exact evaluation and verification of second-order linear recurrences
//! R_{n+1} = f·R_n + g·R_{n-1}, R_0 = h, R_1 = k, for any integer index.
//!
//! Everything is computed over exact commutative rings (arbitrary-precision
//! rationals, a formal quadratic extension for Binet-style closed forms and
//! diagonalization, and univariate polynomials), so every identity check is
//! an equality of ring elements, never a floating-point comparison.
//!
//! The crate is organized around the evaluation methods and the identities
//! that relate them:
//!
//! * [`ring`]: the scalar domains.
//! * [`engine`]: recurrence specs, companion-matrix machinery, the linear
//!   oracle [`engine::r_iter`] and the logarithmic evaluator
//!   [`engine::r_fast`].
//! * [`closed_forms`]: the case classification, determinant-based squared
//!   closed form, degenerate/geometric closed forms, the Binet formula over
//!   the formal extension (valid for negative indices), and diagonalization
//!   checks.
//! * [`identities`]: Cassini-type, summation and addition identities as
//!   exact residuals, plus solved forms.
//! * [`catalog`]: eleven classical sequences with their printed
//!   determinant formulas.
//! * [`sampler`]: a seeded generator for reproducible randomized
//!   verification.
//! * [`verify`]: named residual-check suites over seeded populations.
//!
//! ```
//! use horadam::engine::{r_fast, RecurrenceSpec};
//! use horadam::ring::Rational;
//!
//! let fib = RecurrenceSpec::new(
//!     Rational::integer(1),
//!     Rational::integer(1),
//!     Rational::integer(0),
//!     Rational::integer(1),
//! )
//! .unwrap();
//! assert_eq!(r_fast(&fib, 10).unwrap().to_string(), "55");
//! assert_eq!(r_fast(&fib, -7).unwrap().to_string(), "13");
//! ```

pub mod catalog;
pub mod closed_forms;
pub mod engine;
mod error;
pub mod identities;
pub mod ring;
pub mod sampler;
pub mod verify;

pub use error::{Error, Result};

//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by construction and by partial operations.
///
/// All arithmetic in this crate is exact, so the only failure modes are
/// structural: dividing by a non-unit, mixing incompatible extensions,
/// or asking a closed form for a case it does not cover.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational number was constructed with denominator zero.
    #[error("zero denominator")]
    ZeroDenominator,

    /// Inversion (or a negative power) was requested for a non-unit.
    /// `what` names the offending element or coefficient and its ring.
    #[error("not invertible: {what}")]
    NotInvertible { what: String },

    /// Arithmetic mixed two quadratic extensions with different t².
    #[error("incompatible quadratic extensions: t^2 = {left} vs t^2 = {right}")]
    IncompatibleExtension { left: String, right: String },

    /// A recurrence was constructed with f = 0 or g = 0.
    #[error("recurrence coefficient {name} must be nonzero")]
    ZeroRecurrenceCoefficient { name: &'static str },

    /// The discriminant f² + 4g vanishes, so the two characteristic
    /// roots coincide; use the degenerate closed form instead.
    #[error("discriminant f^2 + 4g is zero; use the degenerate closed form")]
    DegenerateDiscriminant,

    /// A closed form was applied to a recurrence of a different case.
    #[error("wrong case for this closed form: expected {expected}, classified as {actual}")]
    WrongCase {
        expected: &'static str,
        actual: &'static str,
    },

    /// An index outside an operation's domain (e.g. a sum over an empty
    /// or negative range).
    #[error("index {index} outside the domain of {operation}")]
    IndexOutOfDomain { operation: &'static str, index: i64 },

    /// An unknown catalog sequence name.
    #[error("unknown sequence {name:?}; valid names: {valid}")]
    UnknownSequence { name: String, valid: String },

    /// A symbolic catalog entry was used without a sample point.
    #[error("sequence {name:?} is symbolic; a sample point is required")]
    SamplePointRequired { name: String },

    /// A malformed scalar string (CLI and deserialization surface).
    #[error("cannot parse {input:?} as {expected}")]
    Parse { input: String, expected: &'static str },
}

impl Error {
    pub(crate) fn not_invertible(what: impl Into<String>) -> Self {
        Error::NotInvertible { what: what.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

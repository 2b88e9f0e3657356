//! Resolution of a command-line spec source into a rational recurrence.

use crate::{CliError, SpecSource};
use horadam::engine::RecurrenceSpec;
use horadam::ring::{Poly, Rational, Ring};
use horadam::{catalog, Error};

/// A coefficient as typed on the command line.
enum Coefficient {
    Rational(Rational),
    Poly(Poly),
}

fn parse_coefficient(name: &str, text: &str) -> Result<Coefficient, CliError> {
    if text.contains(',') {
        let coeffs = text
            .split(',')
            .map(|part| part.trim().parse::<Rational>())
            .collect::<Result<Vec<_>, Error>>()
            .map_err(|e| CliError::Usage(format!("--{name}: {e}")))?;
        Ok(Coefficient::Poly(Poly::new(coeffs)))
    } else {
        let value = text
            .parse::<Rational>()
            .map_err(|e| CliError::Usage(format!("--{name}: {e}")))?;
        Ok(Coefficient::Rational(value))
    }
}

fn parse_sample(at: &Option<String>) -> Result<Option<Rational>, CliError> {
    at.as_deref()
        .map(|text| {
            text.parse::<Rational>()
                .map_err(|e| CliError::Usage(format!("--at: {e}")))
        })
        .transpose()
}

/// Resolves the source to a rational spec: catalog entries by name
/// (symbolic ones evaluated at --at), explicit coefficients directly,
/// polynomial coefficients evaluated at --at.
pub fn resolve(source: &SpecSource) -> Result<RecurrenceSpec<Rational>, CliError> {
    let sample = parse_sample(&source.at)?;
    if let Some(name) = &source.seq {
        let entry = catalog::get_sequence(name)?;
        return Ok(entry.evaluated_spec(sample.as_ref())?);
    }
    let (Some(f), Some(g), Some(h), Some(k)) = (&source.f, &source.g, &source.h, &source.k)
    else {
        return Err(CliError::Usage(
            "provide either --seq NAME or all of --f, --g, --h, --k".into(),
        ));
    };
    let coefficients = [
        parse_coefficient("f", f)?,
        parse_coefficient("g", g)?,
        parse_coefficient("h", h)?,
        parse_coefficient("k", k)?,
    ];
    let symbolic = coefficients
        .iter()
        .any(|c| matches!(c, Coefficient::Poly(p) if !p.is_unit() && !p.is_zero()));
    let values: Vec<Rational> = match (&sample, symbolic) {
        (None, true) => {
            return Err(CliError::Usage(
                "polynomial coefficients require --at <sample point>".into(),
            ))
        }
        (sample, _) => {
            let x = sample.clone().unwrap_or_else(Rational::zero);
            coefficients
                .iter()
                .map(|c| match c {
                    Coefficient::Rational(r) => r.clone(),
                    Coefficient::Poly(p) => p.eval(&x),
                })
                .collect()
        }
    };
    let [f, g, h, k] = <[Rational; 4]>::try_from(values).expect("four coefficients");
    Ok(RecurrenceSpec::new(f, g, h, k)?)
}

//! Subcommand implementations and output rendering.
//!
//! JSON output is always materialized as a `serde_json::Value` before
//! printing, so keys are emitted in sorted order and every emitted
//! document is a fixed point of parse-then-reserialize.

use crate::{source, BenchArgs, CatalogArgs, CliError, EvalArgs, Format, Method, TableArgs,
            VerifyArgs};
use horadam::catalog;
use horadam::closed_forms::{classify, r_binet, r_binet_counted, r_degenerate, r_geometric,
                            CaseTag};
use horadam::engine::{r_fast, r_fast_counted, r_iter, r_iter_counted, RecurrenceSpec};
use horadam::ring::{Rational, Ring};
use horadam::verify::{run_all, run_suite, Suite, SuiteReport, VerifyConfig};
use serde_json::{json, Value};
use std::time::Instant;

fn spec_json(spec: &RecurrenceSpec<Rational>) -> Value {
    json!({
        "f": spec.f().to_string(),
        "g": spec.g().to_string(),
        "h": spec.h().to_string(),
        "k": spec.k().to_string(),
    })
}

fn evaluate(
    spec: &RecurrenceSpec<Rational>,
    n: i64,
    method: Method,
) -> Result<Rational, CliError> {
    let value = match method {
        Method::Iter => r_iter(spec, n)?,
        Method::Fast | Method::Auto => r_fast(spec, n)?,
        Method::Binet => r_binet(spec, n)?,
    };
    Ok(value)
}

/// Every method applicable to this spec at this index, with its value.
fn cross_checks(
    spec: &RecurrenceSpec<Rational>,
    n: i64,
) -> Result<Vec<(&'static str, Rational)>, CliError> {
    let tag = classify(spec);
    let mut out = vec![
        ("iter", r_iter(spec, n)?),
        ("fast", r_fast(spec, n)?),
    ];
    match tag {
        CaseTag::NonDegenerate => out.push(("binet", r_binet(spec, n)?)),
        CaseTag::Geometric => {
            out.push(("binet", r_binet(spec, n)?));
            out.push(("geometric", r_geometric(spec, n)?));
        }
        CaseTag::DegenerateDiscriminant | CaseTag::DoublyDegenerate => {
            out.push(("degenerate", r_degenerate(spec, n)?));
        }
    }
    Ok(out)
}

pub fn eval(args: EvalArgs) -> Result<(), CliError> {
    let spec = source::resolve(&args.source)?;
    let case = classify(&spec);
    let value = evaluate(&spec, args.n, args.method)?;

    let checks = if args.check || args.method == Method::Auto {
        Some(cross_checks(&spec, args.n)?)
    } else {
        None
    };
    let all_agree = checks
        .as_ref()
        .is_none_or(|list| list.iter().all(|(_, v)| *v == value));

    match args.format {
        Format::Plain => {
            println!("{value}");
            if let Some(list) = &checks {
                println!("case: {case}");
                for (name, v) in list {
                    let status = if *v == value { "agree" } else { "MISMATCH" };
                    println!("{name}: {v} ({status})");
                }
            }
        }
        Format::Csv => {
            println!("n,value");
            println!("{},{}", args.n, value);
        }
        Format::Json => {
            let mut doc = json!({
                "case": case.name(),
                "method": args.method.name(),
                "n": args.n,
                "spec": spec_json(&spec),
                "value": value.to_string(),
            });
            if let Some(list) = &checks {
                doc["checks"] = Value::Array(
                    list.iter()
                        .map(|(name, v)| {
                            json!({
                                "agree": *v == value,
                                "method": *name,
                                "value": v.to_string(),
                            })
                        })
                        .collect(),
                );
            }
            println!("{doc}");
        }
    }

    if !all_agree {
        return Err(CliError::Failure(format!(
            "cross-check disagreement at n = {} for {spec}",
            args.n
        )));
    }
    Ok(())
}

pub fn table(args: TableArgs) -> Result<(), CliError> {
    if args.from > args.to {
        return Err(CliError::Usage(format!(
            "--from {} exceeds --to {}",
            args.from, args.to
        )));
    }
    let spec = source::resolve(&args.source)?;
    let case = classify(&spec);
    let mut rows = Vec::new();
    for n in args.from..=args.to {
        let value = evaluate(&spec, n, args.method)?;
        if args.method == Method::Auto {
            for (name, check) in cross_checks(&spec, n)? {
                if check != value {
                    return Err(CliError::Failure(format!(
                        "cross-check disagreement: {name} at n = {n} for {spec}"
                    )));
                }
            }
        }
        rows.push((n, value));
    }

    match args.format {
        Format::Plain => {
            for (n, value) in &rows {
                println!("{n} {value}");
            }
        }
        Format::Csv => {
            println!("n,value");
            for (n, value) in &rows {
                println!("{n},{value}");
            }
        }
        Format::Json => {
            let doc = Value::Array(
                rows.iter()
                    .map(|(n, value)| {
                        json!({
                            "case": case.name(),
                            "method": args.method.name(),
                            "n": n,
                            "spec": spec_json(&spec),
                            "value": value.to_string(),
                        })
                    })
                    .collect(),
            );
            println!("{doc}");
        }
    }
    Ok(())
}

pub fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let cfg = VerifyConfig {
        seed: args.seed,
        trials: args.trials,
        nmax: args.nmax,
    };
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be positive".into()));
    }
    if args.nmax < 0 {
        return Err(CliError::Usage("--nmax must be nonnegative".into()));
    }
    let reports = if args.suite == "all" {
        run_all(&cfg)
    } else {
        vec![run_suite(Suite::from_name(&args.suite)?, &cfg)]
    };
    let all_passed = reports.iter().all(SuiteReport::passed);

    match args.format {
        Format::Plain => {
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                println!(
                    "suite {}: seed={} trials={} checks={} failures={} {status}",
                    r.suite,
                    r.seed,
                    r.trials,
                    r.checks,
                    r.failures.len()
                );
                for f in r.failures.iter().take(5) {
                    println!("  FAIL spec={} at {}: residual {}", f.spec, f.location, f.residual);
                }
                if r.failures.len() > 5 {
                    println!("  ... and {} more", r.failures.len() - 5);
                }
            }
            println!("overall: {}", if all_passed { "PASS" } else { "FAIL" });
        }
        Format::Csv => {
            println!("suite,checks,failures,status");
            for r in &reports {
                println!(
                    "{},{},{},{}",
                    r.suite,
                    r.checks,
                    r.failures.len(),
                    if r.passed() { "PASS" } else { "FAIL" }
                );
            }
        }
        Format::Json => {
            let doc = json!({
                "pass": all_passed,
                "reports": serde_json::to_value(&reports)
                    .expect("reports serialize"),
            });
            println!("{doc}");
        }
    }

    if all_passed {
        Ok(())
    } else {
        Err(CliError::Failure("verification found nonzero residuals".into()))
    }
}

struct BenchRow {
    method: &'static str,
    outcome: BenchOutcome,
}

enum BenchOutcome {
    Ran {
        seconds: f64,
        ring_muls: u64,
        matrix_muls: Option<u64>,
        value: Rational,
    },
    Skipped(String),
}

fn digit_count(r: &Rational) -> usize {
    let digits = |s: &str| s.trim_start_matches('-').len();
    digits(&r.numerator().to_string())
}

pub fn bench(args: BenchArgs) -> Result<(), CliError> {
    let spec = source::resolve(&args.source)?;
    let mut rows = Vec::new();
    for name in args.methods.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (method, outcome) = match name {
            "iter" => {
                let start = Instant::now();
                let (value, ring_muls) = r_iter_counted(&spec, args.n)?;
                (
                    "iter",
                    BenchOutcome::Ran {
                        seconds: start.elapsed().as_secs_f64(),
                        ring_muls,
                        matrix_muls: None,
                        value,
                    },
                )
            }
            "fast" => {
                let start = Instant::now();
                let (value, cost) = r_fast_counted(&spec, args.n)?;
                (
                    "fast",
                    BenchOutcome::Ran {
                        seconds: start.elapsed().as_secs_f64(),
                        ring_muls: cost.ring_muls,
                        matrix_muls: Some(cost.matrix_muls),
                        value,
                    },
                )
            }
            "binet" => {
                if spec.discriminant().is_zero() {
                    ("binet", BenchOutcome::Skipped("degenerate discriminant".into()))
                } else {
                    let start = Instant::now();
                    let (value, ring_muls) = r_binet_counted(&spec, args.n)?;
                    (
                        "binet",
                        BenchOutcome::Ran {
                            seconds: start.elapsed().as_secs_f64(),
                            ring_muls,
                            matrix_muls: None,
                            value,
                        },
                    )
                }
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown method {other:?}; choose from iter, fast, binet"
                )))
            }
        };
        rows.push(BenchRow { method, outcome });
    }
    if rows.is_empty() {
        return Err(CliError::Usage("--methods must name at least one method".into()));
    }

    // Results must agree before any timing is reported.
    let values: Vec<(&str, &Rational)> = rows
        .iter()
        .filter_map(|row| match &row.outcome {
            BenchOutcome::Ran { value, .. } => Some((row.method, value)),
            BenchOutcome::Skipped(_) => None,
        })
        .collect();
    if let Some((first_name, first)) = values.first() {
        for (name, value) in &values[1..] {
            if value != first {
                return Err(CliError::Failure(format!(
                    "methods disagree at n = {}: {first_name} != {name}",
                    args.n
                )));
            }
        }
    }

    match args.format {
        Format::Plain => {
            for row in &rows {
                match &row.outcome {
                    BenchOutcome::Ran {
                        seconds,
                        ring_muls,
                        matrix_muls,
                        value,
                    } => {
                        let mm = matrix_muls
                            .map(|m| format!(" matrix_muls={m}"))
                            .unwrap_or_default();
                        println!(
                            "method={} seconds={seconds:.6} ring_muls={ring_muls}{mm} digits={}",
                            row.method,
                            digit_count(value)
                        );
                    }
                    BenchOutcome::Skipped(reason) => {
                        println!("method={} skipped: {reason}", row.method);
                    }
                }
            }
            println!("agree: yes");
        }
        Format::Csv => {
            println!("method,seconds,ring_muls,matrix_muls,digits,skipped");
            for row in &rows {
                match &row.outcome {
                    BenchOutcome::Ran {
                        seconds,
                        ring_muls,
                        matrix_muls,
                        value,
                    } => println!(
                        "{},{seconds:.6},{ring_muls},{},{},",
                        row.method,
                        matrix_muls.map(|m| m.to_string()).unwrap_or_default(),
                        digit_count(value)
                    ),
                    BenchOutcome::Skipped(reason) => {
                        println!("{},,,,,{reason}", row.method)
                    }
                }
            }
        }
        Format::Json => {
            let methods: Vec<Value> = rows
                .iter()
                .map(|row| match &row.outcome {
                    BenchOutcome::Ran {
                        seconds,
                        ring_muls,
                        matrix_muls,
                        value,
                    } => json!({
                        "digits": digit_count(value),
                        "matrix_muls": matrix_muls,
                        "method": row.method,
                        "ring_muls": ring_muls,
                        "seconds": seconds,
                    }),
                    BenchOutcome::Skipped(reason) => json!({
                        "method": row.method,
                        "skipped": reason,
                    }),
                })
                .collect();
            let doc = json!({
                "agree": true,
                "methods": methods,
                "n": args.n,
                "spec": spec_json(&spec),
            });
            println!("{doc}");
        }
    }
    Ok(())
}

pub fn catalog(args: CatalogArgs) -> Result<(), CliError> {
    let entries = catalog::entries();
    match args.format {
        Format::Plain => {
            println!(
                "{:<22} {:<8} {:<8} {:<6} {:<6} symbolic",
                "name", "f", "g", "h", "k"
            );
            for e in &entries {
                let s = e.poly_spec();
                println!(
                    "{:<22} {:<8} {:<8} {:<6} {:<6} {}",
                    e.name(),
                    s.f().to_string(),
                    s.g().to_string(),
                    s.h().to_string(),
                    s.k().to_string(),
                    e.is_symbolic()
                );
            }
        }
        Format::Csv => {
            println!("name,f,g,h,k,symbolic");
            for e in &entries {
                let s = e.poly_spec();
                println!(
                    "{},{},{},{},{},{}",
                    e.name(),
                    s.f(),
                    s.g(),
                    s.h(),
                    s.k(),
                    e.is_symbolic()
                );
            }
        }
        Format::Json => {
            let doc = Value::Array(
                entries
                    .iter()
                    .map(|e| {
                        let s = e.poly_spec();
                        json!({
                            "f": s.f().to_string(),
                            "formula": e.formula(),
                            "g": s.g().to_string(),
                            "h": s.h().to_string(),
                            "k": s.k().to_string(),
                            "name": e.name(),
                            "symbolic": e.is_symbolic(),
                        })
                    })
                    .collect(),
            );
            println!("{doc}");
        }
    }
    Ok(())
}

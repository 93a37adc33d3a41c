//! `gap` subcommand: Fredholm determinant of a kernel on an interval union.

use crate::config::RunConfig;
use rmt_core::fredholm::{fredholm_det, IntervalUnion, KernelSpec};
use rmt_core::{Error, Result};

pub struct GapArgs<'a> {
    pub kernel: &'a str,
    pub intervals: &'a [String],
    pub lambda: f64,
    pub order: usize,
    pub hermite_n: Option<usize>,
    pub strict: bool,
}

pub fn run(config: &RunConfig, args: &GapArgs) -> Result<()> {
    let kernel = match args.kernel {
        "sine" => KernelSpec::Sine,
        "airy" => KernelSpec::Airy,
        "hermite" => {
            let n = args.hermite_n.ok_or_else(|| {
                Error::Domain("--kernel hermite requires --n <N>".into())
            })?;
            KernelSpec::HermiteFinite(n)
        }
        other => {
            return Err(Error::Domain(format!(
                "unknown kernel {other:?}; expected sine, airy, or hermite"
            )))
        }
    };
    let union = parse_intervals(args.intervals)?;
    let det = fredholm_det(&kernel, &union, args.lambda, args.order)?;
    let tol = config.tolerance("gap_tol", 1e-8);
    if args.strict {
        det.require(tol)?;
    }
    println!(
        "{}",
        serde_json::json!({
            "kernel": args.kernel,
            "intervals": args.intervals,
            "lambda": args.lambda,
            "order": args.order,
            "value": det.value,
            "coarse_value": det.coarse_value,
            "error_estimate": det.error_estimate(),
        })
    );
    Ok(())
}

/// Parse repeated `--interval a:b` (with `b = inf` opening a tail) into one
/// union. Endpoint lists from separate flags are concatenated in order.
fn parse_intervals(specs: &[String]) -> Result<IntervalUnion> {
    if specs.is_empty() {
        return Ok(IntervalUnion::empty());
    }
    let mut endpoints = Vec::new();
    let mut semi_infinite = false;
    for (i, spec) in specs.iter().enumerate() {
        let (a, b) = spec.split_once(':').ok_or_else(|| {
            Error::Domain(format!("--interval must look like a:b, got {spec:?}"))
        })?;
        let lo: f64 = a
            .parse()
            .map_err(|_| Error::Domain(format!("bad interval endpoint {a:?}")))?;
        if b == "inf" {
            if i + 1 != specs.len() {
                return Err(Error::Domain(
                    "only the last interval may be semi-infinite".into(),
                ));
            }
            endpoints.push(lo);
            semi_infinite = true;
        } else {
            let hi: f64 = b
                .parse()
                .map_err(|_| Error::Domain(format!("bad interval endpoint {b:?}")))?;
            if lo == hi {
                // A degenerate interval contributes nothing; honor the
                // documented `0:0 → 1` contract by dropping it.
                continue;
            }
            endpoints.push(lo);
            endpoints.push(hi);
        }
    }
    if endpoints.is_empty() {
        return Ok(IntervalUnion::empty());
    }
    if semi_infinite {
        IntervalUnion::semi_infinite(&endpoints)
    } else {
        IntervalUnion::from_endpoints(&endpoints)
    }
}

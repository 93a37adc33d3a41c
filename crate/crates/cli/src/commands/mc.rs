//! `mc` subcommand: Monte Carlo experiments with samples CSV plus a summary
//! JSON carrying the KS distance against the matching law.

use crate::config::RunConfig;
use rmt_core::combinatorics::simulate_lis;
use rmt_core::ensembles::{
    bulk_spacings, edge_scale, ks_statistic, sample_batch, EmpiricalDistribution,
    EnsembleSpec, EntryLaw,
};
use rmt_core::evt::{evt_cdf, simulate_diagonal_max, EntryCdf};
use rmt_core::painleve::{tw_cdf, Beta, GaudinLaw, PainleveSolution};
use rmt_core::{Error, Result};
use std::io::Write;

pub struct McArgs<'a> {
    pub experiment: &'a str,
    pub size: usize,
    pub trials: usize,
    pub law: Option<&'a str>,
    pub window: f64,
}

pub fn run(config: &RunConfig, args: &McArgs) -> Result<()> {
    match args.experiment {
        "edge" => edge(config, args, EntryLaw::Gaussian, Beta::Two),
        "wigner-edge" => edge(config, args, EntryLaw::Rademacher, Beta::One),
        "bulk" => bulk(config, args),
        "lis" => lis(config, args),
        "evt" => evt(config, args),
        other => Err(Error::Domain(format!(
            "unknown experiment {other:?}; expected edge, bulk, wigner-edge, lis, evt"
        ))),
    }
}

fn require_trials(args: &McArgs, minimum: usize) -> Result<()> {
    if args.trials < minimum {
        return Err(Error::InsufficientData(format!(
            "experiment {} needs at least {minimum} trials for its KS check, got {}",
            args.experiment, args.trials
        )));
    }
    Ok(())
}

/// Clamped Tracy–Widom CDF usable as a KS reference on all of R.
fn tw_reference(beta: Beta, sol: &PainleveSolution) -> impl Fn(f64) -> f64 + '_ {
    let lo = sol.x_end() + 1.0;
    let hi = sol.x_start();
    move |s: f64| {
        let scale = if beta == Beta::Four {
            std::f64::consts::SQRT_2
        } else {
            1.0
        };
        if scale * s < lo {
            0.0
        } else if scale * s > hi {
            1.0
        } else {
            tw_cdf(beta, s, sol).unwrap_or(1.0)
        }
    }
}

fn edge(config: &RunConfig, args: &McArgs, law: EntryLaw, beta: Beta) -> Result<()> {
    require_trials(args, 50)?;
    let spec = EnsembleSpec::wigner(beta, law, args.size);
    let batch = config.install(|| sample_batch(&spec, config.seed, args.trials))??;
    let scaled: Vec<f64> = batch.iter().map(|s| edge_scale(s, &spec)).collect();
    let max_over_sqrt_n: Vec<f64> = batch
        .iter()
        .map(|s| s.max() / (args.size as f64).sqrt())
        .collect();

    let descriptor = format!(
        "mc --experiment {} --size {} --trials {}",
        args.experiment, args.size, args.trials
    );
    let mut file = config.create_output(
        &format!("mc_{}.csv", args.experiment),
        &descriptor,
    )?;
    writeln!(file, "edge_scaled").map_err(io_err)?;
    for v in &scaled {
        writeln!(file, "{v:.17e}").map_err(io_err)?;
    }

    let sol = PainleveSolution::standard()?;
    let emp = EmpiricalDistribution::new(scaled)?;
    let ks1 = ks_statistic(&emp, tw_reference(beta, &sol));
    let ks_other = ks_statistic(
        &emp,
        tw_reference(if beta == Beta::One { Beta::Two } else { Beta::One }, &sol),
    );
    let mean_ratio = max_over_sqrt_n.iter().sum::<f64>() / max_over_sqrt_n.len() as f64;
    let summary = serde_json::json!({
        "experiment": args.experiment,
        "ensemble": spec.label(),
        "size": args.size,
        "trials": args.trials,
        "seed": config.seed,
        "ks_vs_tw": { format!("F{}", beta.value()): ks1,
                      format!("F{}", if beta == Beta::One { 2 } else { 1 }): ks_other },
        "mean_lambda_max_over_sqrt_n": mean_ratio,
        "edge_target": 2.0 * spec.sigma,
    });
    write_summary(config, args, &descriptor, &summary)
}

fn bulk(config: &RunConfig, args: &McArgs) -> Result<()> {
    require_trials(args, 10)?;
    let spec = EnsembleSpec::gaussian(Beta::Two, args.size);
    let batch = config.install(|| sample_batch(&spec, config.seed, args.trials))??;
    let mut spacings = Vec::new();
    for sample in &batch {
        spacings.extend(bulk_spacings(sample, args.window)?);
    }

    let descriptor = format!(
        "mc --experiment bulk --size {} --trials {} --window {}",
        args.size, args.trials, args.window
    );
    let mut file = config.create_output("mc_bulk.csv", &descriptor)?;
    writeln!(file, "spacing").map_err(io_err)?;
    for v in &spacings {
        writeln!(file, "{v:.17e}").map_err(io_err)?;
    }

    let law = GaudinLaw::standard()?;
    let emp = EmpiricalDistribution::new(spacings.clone())?;
    let ks = ks_statistic(&emp, |s| law.cdf(s).unwrap_or(1.0));
    let mean = spacings.iter().sum::<f64>() / spacings.len() as f64;
    let summary = serde_json::json!({
        "experiment": "bulk",
        "ensemble": spec.label(),
        "size": args.size,
        "trials": args.trials,
        "window": args.window,
        "seed": config.seed,
        "spacing_count": spacings.len(),
        "mean_spacing": mean,
        "ks_vs_gaudin": ks,
    });
    write_summary(config, args, &descriptor, &summary)
}

fn lis(config: &RunConfig, args: &McArgs) -> Result<()> {
    require_trials(args, 100)?;
    let sim = config.install(|| simulate_lis(args.size, args.trials, config.seed))??;

    let descriptor = format!(
        "mc --experiment lis --size {} --trials {}",
        args.size, args.trials
    );
    let mut file = config.create_output("mc_lis.csv", &descriptor)?;
    writeln!(file, "lis_length,bdj_scaled").map_err(io_err)?;
    let scaled = sim.bdj_scaled();
    for (l, s) in sim.lengths.iter().zip(&scaled) {
        writeln!(file, "{l},{s:.17e}").map_err(io_err)?;
    }

    let sol = PainleveSolution::standard()?;
    let emp = EmpiricalDistribution::new(scaled)?;
    let ks = ks_statistic(&emp, tw_reference(Beta::Two, &sol));
    let summary = serde_json::json!({
        "experiment": "lis",
        "size": args.size,
        "trials": args.trials,
        "seed": config.seed,
        "mean": sim.stats.mean,
        "sd": sim.stats.sd,
        "skewness": sim.stats.skewness,
        "kurtosis_excess": sim.stats.kurtosis_excess,
        "min": sim.stats.min,
        "max": sim.stats.max,
        "prob_7_to_19": sim.range_probability(7, 19),
        "ks_bdj_scaled_vs_f2": ks,
    });
    write_summary(config, args, &descriptor, &summary)
}

fn evt(config: &RunConfig, args: &McArgs) -> Result<()> {
    require_trials(args, 100)?;
    let law_name = args.law.unwrap_or("exponential");
    let entry = match law_name {
        "exponential" => EntryCdf::Exponential,
        "uniform01" => EntryCdf::Uniform01,
        other => {
            if let Some(alpha) = other.strip_prefix("pareto:") {
                let alpha: f64 = alpha.parse().map_err(|_| {
                    Error::Domain(format!("bad pareto alpha in --law {other:?}"))
                })?;
                EntryCdf::Pareto { alpha }
            } else {
                return Err(Error::Domain(format!(
                    "unknown --law {other:?}; expected exponential, uniform01, pareto:<alpha>"
                )));
            }
        }
    };
    let norm = entry.standard_normalization();
    let emp = config.install(|| {
        simulate_diagonal_max(entry, args.size, args.trials, &norm, config.seed)
    })??;

    let descriptor = format!(
        "mc --experiment evt --law {law_name} --size {} --trials {}",
        args.size, args.trials
    );
    let mut file = config.create_output("mc_evt.csv", &descriptor)?;
    writeln!(file, "scaled_max").map_err(io_err)?;
    for v in emp.values() {
        writeln!(file, "{v:.17e}").map_err(io_err)?;
    }

    let limit = entry.limit();
    let ks = ks_statistic(&emp, |x| evt_cdf(limit, x));
    let summary = serde_json::json!({
        "experiment": "evt",
        "entry_law": law_name,
        "limit_law": format!("{limit:?}"),
        "size": args.size,
        "trials": args.trials,
        "seed": config.seed,
        "ks_vs_limit": ks,
    });
    write_summary(config, args, &descriptor, &summary)
}

fn write_summary(
    config: &RunConfig,
    args: &McArgs,
    descriptor: &str,
    summary: &serde_json::Value,
) -> Result<()> {
    let mut file = config.create_output(
        &format!("mc_{}_summary.json", args.experiment),
        descriptor,
    )?;
    let text = serde_json::to_string_pretty(summary).expect("json");
    writeln!(file, "{text}").map_err(io_err)?;
    println!("{text}");
    Ok(())
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: "mc output".into(),
        message: e.to_string(),
    }
}

//! `tw` subcommand: tabulate a Tracy–Widom distribution as plot-ready CSV.

use crate::config::RunConfig;
use rmt_core::painleve::{tw_tabulate, Beta, PainleveSolution};
use rmt_core::{Error, Result};
use std::io::Write;

pub fn run(config: &RunConfig, beta: u32, range: &str, points: usize) -> Result<()> {
    let beta = Beta::from_u32(beta)?;
    let (s_min, s_max) = parse_range(range)?;
    let sol = PainleveSolution::standard()?;
    let table = tw_tabulate(beta, s_min, s_max, points, &sol)?;

    let descriptor = format!("tw --beta {beta} --range {s_min}:{s_max} --points {points}");
    let mut file = config.create_output(&format!("tw_beta{beta}.csv"), &descriptor)?;
    let write_err = |e: std::io::Error| Error::Io {
        path: "tw csv".into(),
        message: e.to_string(),
    };
    writeln!(file, "s,cdf,pdf").map_err(write_err)?;
    for ((s, c), p) in table
        .s_grid()
        .iter()
        .zip(table.cdf_values())
        .zip(table.pdf_values())
    {
        writeln!(file, "{s:.17e},{c:.17e},{p:.17e}").map_err(write_err)?;
    }
    eprintln!(
        "tw: wrote {} points for beta = {beta} on [{s_min}, {s_max}]",
        points
    );
    Ok(())
}

fn parse_range(range: &str) -> Result<(f64, f64)> {
    let (a, b) = range.split_once(':').ok_or_else(|| {
        Error::Domain(format!("--range must look like lo:hi, got {range:?}"))
    })?;
    let lo: f64 = a
        .parse()
        .map_err(|_| Error::Domain(format!("bad range endpoint {a:?}")))?;
    let hi: f64 = b
        .parse()
        .map_err(|_| Error::Domain(format!("bad range endpoint {b:?}")))?;
    Ok((lo, hi))
}

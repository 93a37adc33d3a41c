//! `spectra` subcommand: ingest → unfold → spacing report.

use crate::config::RunConfig;
use rmt_core::spectra::{
    adjacency_spectrum, load_spectrum_with_min, spacing_report, unfold, DensityModel,
    RawSpectrum, Reference, SpectrumFormat, UnfoldMethod,
};
use rmt_core::{Error, Result};
use std::io::Write;
use std::path::Path;

pub struct SpectraArgs<'a> {
    pub input: &'a Path,
    pub format: &'a str,
    pub adjacency: bool,
    pub n_vertices: Option<usize>,
    pub unfold: &'a str,
    pub reference: &'a str,
    pub min_count: usize,
}

pub fn run(config: &RunConfig, args: &SpectraArgs) -> Result<()> {
    let raw: RawSpectrum = if args.adjacency {
        let n = args.n_vertices.ok_or_else(|| {
            Error::Domain("--adjacency requires --n-vertices".into())
        })?;
        let spectrum = adjacency_spectrum(args.input, n)?;
        eprintln!(
            "spectra: adjacency matrix on {n} vertices, {} eigenvalues",
            spectrum.len()
        );
        println!(
            "{}",
            serde_json::json!({
                "source": spectrum.source(),
                "eigenvalues": spectrum.values(),
            })
        );
        spectrum
    } else {
        let format = parse_format(args.format)?;
        let raw = load_spectrum_with_min(args.input, format, args.min_count)?;
        eprintln!(
            "spectra: loaded {} values ({} parsed, {} skipped, {} duplicates dropped)",
            raw.len(),
            raw.parsed(),
            raw.skipped(),
            raw.duplicates()
        );
        raw
    };

    let method = parse_unfold(args.unfold)?;
    let unfolded = unfold(&raw, &method)?;
    let reference = parse_reference(args.reference)?;
    let report = spacing_report(&unfolded, reference)?;

    let descriptor = format!(
        "spectra --input {} --unfold {} --reference {}",
        args.input.display(),
        method,
        reference.name()
    );
    let mut json_file = config.create_output("spacing_report.json", &descriptor)?;
    writeln!(
        json_file,
        "{}",
        serde_json::to_string_pretty(&report).expect("json")
    )
    .map_err(io_err)?;

    let mut csv = config.create_output("spacing_histogram.csv", &descriptor)?;
    writeln!(csv, "bin_lo,bin_hi,density,reference_density").map_err(io_err)?;
    for bin in &report.histogram {
        writeln!(
            csv,
            "{:.6},{:.6},{:.17e},{:.17e}",
            bin.lo, bin.hi, bin.density, bin.reference_density
        )
        .map_err(io_err)?;
    }

    println!(
        "{}",
        serde_json::json!({
            "method": report.method,
            "reference": report.reference,
            "approximate": report.approximate,
            "n": report.n,
            "ks": report.ks,
            "mean_spacing": report.moments.mean,
        })
    );
    Ok(())
}

fn parse_format(s: &str) -> Result<SpectrumFormat> {
    if s == "plain" {
        return Ok(SpectrumFormat::Plain);
    }
    if let Some(k) = s.strip_prefix("csv:") {
        let k: usize = k
            .parse()
            .map_err(|_| Error::Domain(format!("bad csv column in --format {s:?}")))?;
        return Ok(SpectrumFormat::CsvColumn(k));
    }
    Err(Error::Domain(format!(
        "unknown --format {s:?}; expected plain or csv:<column>"
    )))
}

fn parse_unfold(s: &str) -> Result<UnfoldMethod> {
    if let Some(w) = s.strip_prefix("local:") {
        let window: usize = w
            .parse()
            .map_err(|_| Error::Domain(format!("bad window in --unfold {s:?}")))?;
        return Ok(UnfoldMethod::LocalMean { window });
    }
    if let Some(d) = s.strip_prefix("poly:") {
        let degree: usize = d
            .parse()
            .map_err(|_| Error::Domain(format!("bad degree in --unfold {s:?}")))?;
        return Ok(UnfoldMethod::Polynomial { degree });
    }
    if s == "zeta" {
        return Ok(UnfoldMethod::GivenDensity(DensityModel::ZetaZeros));
    }
    Err(Error::Domain(format!(
        "unknown --unfold {s:?}; expected local:<w>, poly:<d>, or zeta"
    )))
}

fn parse_reference(s: &str) -> Result<Reference> {
    match s {
        "gaudin" => Ok(Reference::Gaudin),
        "goe-surmise" => Ok(Reference::GoeSurmise),
        "poisson" => Ok(Reference::Poisson),
        other => Err(Error::Domain(format!(
            "unknown --reference {other:?}; expected gaudin, goe-surmise, or poisson"
        ))),
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: "spectra output".into(),
        message: e.to_string(),
    }
}

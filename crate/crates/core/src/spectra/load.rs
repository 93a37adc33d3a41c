//! Spectrum file ingestion.

use crate::error::{Error, Result};
use std::io::BufRead;
use std::path::Path;

/// On-disk spectrum formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumFormat {
    /// One decimal value per line; blank lines and lines starting with '#'
    /// are ignored.
    Plain,
    /// Comma-separated rows; take the 0-based column k. Comment and blank
    /// lines are ignored the same way.
    CsvColumn(usize),
}

/// A loaded spectrum: sorted ascending, exact duplicates removed.
#[derive(Debug, Clone, PartialEq)]
pub struct RawSpectrum {
    values: Vec<f64>,
    source: String,
    parsed: usize,
    skipped: usize,
    duplicates: usize,
}

impl RawSpectrum {
    /// Constructor for spectra computed in memory (adjacency matrices,
    /// sampled ensembles); no duplicate removal, since numerically coincident
    /// eigenvalues are genuine multiplicities rather than file artifacts.
    pub fn from_computed(mut values: Vec<f64>, source: impl Into<String>) -> Self {
        values.sort_by(f64::total_cmp);
        let parsed = values.len();
        RawSpectrum {
            values,
            source: source.into(),
            parsed,
            skipped: 0,
            duplicates: 0,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Lines successfully parsed into values (before deduplication).
    pub fn parsed(&self) -> usize {
        self.parsed
    }

    /// Comment/blank lines skipped.
    pub fn skipped(&self) -> usize {
        self.skipped
    }

    /// Exact duplicates dropped.
    pub fn duplicates(&self) -> usize {
        self.duplicates
    }
}

/// Load a spectrum, requiring at least 100 values.
pub fn load_spectrum(path: impl AsRef<Path>, format: SpectrumFormat) -> Result<RawSpectrum> {
    load_spectrum_with_min(path, format, 100)
}

/// Load with an explicit minimum count (0 disables the check).
pub fn load_spectrum_with_min(
    path: impl AsRef<Path>,
    format: SpectrumFormat,
    min_count: usize,
) -> Result<RawSpectrum> {
    let path = path.as_ref();
    let display = path.display().to_string();
    let file = std::fs::File::open(path).map_err(|e| Error::Io {
        path: display.clone(),
        message: e.to_string(),
    })?;
    let reader = std::io::BufReader::new(file);

    let mut values = Vec::new();
    let mut skipped = 0usize;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Io {
            path: display.clone(),
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            skipped += 1;
            continue;
        }
        let token = match format {
            SpectrumFormat::Plain => trimmed,
            SpectrumFormat::CsvColumn(k) => {
                trimmed.split(',').nth(k).map(str::trim).ok_or_else(|| Error::Parse {
                    path: display.clone(),
                    line: lineno + 1,
                    message: format!("row has no column {k}"),
                })?
            }
        };
        let v: f64 = token.parse().map_err(|_| Error::Parse {
            path: display.clone(),
            line: lineno + 1,
            message: format!("not a number: {token:?}"),
        })?;
        if !v.is_finite() {
            return Err(Error::Parse {
                path: display.clone(),
                line: lineno + 1,
                message: format!("non-finite value {v}"),
            });
        }
        values.push(v);
    }

    let parsed = values.len();
    values.sort_by(f64::total_cmp);
    let before = values.len();
    values.dedup();
    let duplicates = before - values.len();

    if values.len() < min_count {
        return Err(Error::InsufficientData(format!(
            "{display}: {} distinct values, need at least {min_count}",
            values.len()
        )));
    }
    Ok(RawSpectrum {
        values,
        source: display,
        parsed,
        skipped,
        duplicates,
    })
}

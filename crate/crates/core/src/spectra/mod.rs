//! External-spectrum pipeline: ingestion, unfolding, spacing comparison.

mod adjacency;
mod load;
mod report;
mod unfold;

pub use adjacency::adjacency_spectrum;
pub use load::{load_spectrum, load_spectrum_with_min, RawSpectrum, SpectrumFormat};
pub use report::{spacing_report, HistogramBin, Reference, SpacingReport};
pub use unfold::{unfold, zeta_counting, DensityModel, UnfoldMethod, UnfoldedSpectrum};

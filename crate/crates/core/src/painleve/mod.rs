//! Painlevé representations of the universal distributions: the
//! Hastings–McLeod Painlevé II transcendent behind F₁/F₂/F₄, and σ-form
//! Painlevé V behind the sine-kernel gap probability and the Gaudin spacing
//! density.

mod gaudin;
mod pii;
mod sigma_pv;
mod tw;

pub use gaudin::{gaudin_density, GaudinLaw};
pub use pii::{solve_pii, PainleveSolution, PiiPoint};
pub use sigma_pv::{solve_sigma_pv, SigmaPVSolution};
pub use tw::{tw_cdf, tw_pdf, tw_tabulate, Beta, TWDistribution};


//! Analytic separability and entanglement bounds for the gravitational
//! channel, and the conversion from laboratory parameters.

pub mod conditions;
pub mod error;
pub mod omega;
pub mod physical;
pub mod report;
pub mod sampler;

pub use conditions::{
    EbForm, OptimalSqueezing, ea_eb_conditions, ea_eb_conditions_with, finite_squeezing_condition,
    lossy_bound_margin, lossy_finite_squeezing_condition, optimal_squeezing, squeezing_gain,
    universal_threshold_margin,
};
pub use error::{BoundsError, Result};
pub use omega::{
    OMEGA_TOL, OmegaComponents, SeparabilityVerdict, WITNESS_SENTINEL, WitnessSqueezing, omega_components,
    separability_preserved, squeezed_pair_negativity, witness_squeezing,
};
pub use physical::{Dimensionless, PhysicalParams, physical_to_dimensionless};
pub use report::{BoundReport, CSV_HEADER, bound_report};
pub use sampler::SeparableSampler;

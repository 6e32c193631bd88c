//! Fock-basis output states of the gravitational beam-splitter channel for
//! inputs `|n, 0⟩`, with and without thermal noise, and their PPT negativity.

pub mod density;
pub mod error;
pub mod logfact;
pub mod ppt;
pub mod pure;
pub mod thermal;

pub use density::{DumpHeader, FockDensityMatrix, HERMITIAN_TOL};
pub use error::{FockError, Result};
pub use logfact::{LogFactorials, special_log_factorials};
pub use ppt::{PtMode, min_pt_eigenvalue, partial_transpose_spectrum, ppt_negativity, ppt_negativity_on, pt_trace_norm};
pub use pure::{FockConfig, pure_fock_negativity, pure_output_density, pure_output_density_with};
pub use thermal::{initial_dim, thermal_output_density, thermal_output_density_with};

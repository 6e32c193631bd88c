//! Two-mode Gaussian pipeline for the gravitational beam-splitter channel:
//! channel construction, covariance evolution, measurement loss and PPT
//! negativity, plus the closed form for aligned squeezed inputs.
//!
//! Quadratures obey `[X, Y] = 2i`, so the vacuum covariance is the identity.
//! First moments are not tracked.

pub mod channel;
pub mod covariance;
pub mod error;
pub mod negativity;
pub mod params;
pub mod real;

pub use channel::{GravityChannel, apply_loss, evolve, gravity_channel, gravity_channel_in, swap_coefficients};
pub use covariance::{CovMat4, input_squeezed_pair, input_tmsv, product_state};
pub use error::{GaussianError, Result};
pub use negativity::{
    SEPARABILITY_TOL, closed_form_negativity_squeezed, closed_form_nu_squeezed, gaussian_negativity,
    is_separable_nu, negativity_from_nu, ppt_min_symplectic_eigenvalue, weak_damping_negativity_squeezed,
    weak_damping_nu_squeezed,
};
pub use params::ChannelParams;
pub use real::{Dd, Real};

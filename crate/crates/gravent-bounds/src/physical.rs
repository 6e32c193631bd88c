use crate::error::{BoundsError, Result};

/// Newtonian constant of gravitation, m³ kg⁻¹ s⁻² (CODATA 2018).
pub const NEWTON_G: f64 = 6.674_30e-11;
/// Reduced Planck constant, J s (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817_00e-34;
/// Boltzmann constant, J K⁻¹ (CODATA 2018, exact).
pub const K_B: f64 = 1.380_649_000_00e-23;

/// Laboratory parameters in SI units, except the density in g/cm³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Mass per cubed separation, M/d³, in g/cm³.
    pub mass_density: f64,
    /// Mechanical angular frequency, rad/s.
    pub omega_m: f64,
    /// Mechanical damping rate, rad/s.
    pub gamma_m: f64,
    /// Bath temperature, K.
    pub temperature: f64,
    /// Interaction time, s.
    pub t_g: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dimensionless {
    /// Gravitational coupling rate, rad/s.
    pub g_g: f64,
    pub n_th: f64,
    pub theta: f64,
    pub damping: f64,
    pub q_m: f64,
}

impl Dimensionless {
    /// `g_G / (2γ_m N_th)`.
    pub fn ratio(&self) -> f64 {
        self.theta / (2.0 * self.damping * self.n_th)
    }

    pub fn theta_over_2pi(&self) -> f64 {
        self.theta / std::f64::consts::TAU
    }
}

pub fn physical_to_dimensionless(pp: &PhysicalParams) -> Result<Dimensionless> {
    for (name, v) in [
        ("mass_density", pp.mass_density),
        ("omega_m", pp.omega_m),
        ("gamma_m", pp.gamma_m),
        ("temperature", pp.temperature),
        ("t_g", pp.t_g),
    ] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(BoundsError::Domain(format!("{name} must be positive and finite, got {v}")));
        }
    }
    let rho_si = pp.mass_density * 1e3;
    let g_g = NEWTON_G * rho_si / pp.omega_m;
    Ok(Dimensionless {
        g_g,
        n_th: K_B * pp.temperature / (HBAR * pp.omega_m),
        theta: g_g * pp.t_g,
        damping: pp.gamma_m * pp.t_g,
        q_m: pp.omega_m / (2.0 * pp.gamma_m),
    })
}

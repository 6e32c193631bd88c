use crate::error::{GaussianError, Result};

/// Dimensionless knobs of the gravitational stage plus the readout loss.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    /// Gravitational phase g_G·t_G in radians.
    pub theta: f64,
    /// γ_m·t_G.
    pub damping: f64,
    /// Bath occupation N_th.
    pub n_th: f64,
    pub eta_a: f64,
    pub eta_b: f64,
    pub nbar_a: f64,
    pub nbar_b: f64,
}

impl ChannelParams {
    /// Lossless channel with vacuum environments.
    pub fn new(theta: f64, damping: f64, n_th: f64) -> Self {
        ChannelParams {
            theta,
            damping,
            n_th,
            eta_a: 1.0,
            eta_b: 1.0,
            nbar_a: 0.0,
            nbar_b: 0.0,
        }
    }

    /// Same transmittance on both arms, vacuum environment.
    pub fn with_eta(mut self, eta: f64) -> Self {
        self.eta_a = eta;
        self.eta_b = eta;
        self
    }

    pub fn with_loss(mut self, eta_a: f64, eta_b: f64, nbar_a: f64, nbar_b: f64) -> Self {
        self.eta_a = eta_a;
        self.eta_b = eta_b;
        self.nbar_a = nbar_a;
        self.nbar_b = nbar_b;
        self
    }

    /// Accumulated thermal decoherence γ_m·t_G·N_th.
    pub fn thermal(&self) -> f64 {
        self.damping * self.n_th
    }

    pub fn validate(&self) -> Result<()> {
        if !self.theta.is_finite() {
            return Err(GaussianError::Domain(format!("theta must be finite, got {}", self.theta)));
        }
        check_nonneg("damping", self.damping)?;
        check_nonneg("n_th", self.n_th)?;
        check_nonneg("nbar_a", self.nbar_a)?;
        check_nonneg("nbar_b", self.nbar_b)?;
        check_unit("eta_a", self.eta_a)?;
        check_unit("eta_b", self.eta_b)?;
        Ok(())
    }
}

fn check_nonneg(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x >= 0.0 {
        Ok(())
    } else {
        Err(GaussianError::Domain(format!("{name} must be finite and >= 0, got {x}")))
    }
}

pub(crate) fn check_unit(name: &str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(GaussianError::Domain(format!("{name} must lie in [0, 1], got {x}")))
    }
}

use num_complex::Complex64;

use crate::density::FockDensityMatrix;
use crate::error::{FockError, Result};
use crate::logfact::LogFactorials;

/// Limits shared by the Fock constructors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockConfig {
    /// Largest input photon number accepted.
    pub max_n: usize,
    /// Largest trace deficit accepted.
    pub trace_tol: f64,
    /// Hard cap on the adaptive truncation per mode.
    pub max_dim: usize,
}

impl Default for FockConfig {
    fn default() -> Self {
        FockConfig { max_n: 10, trace_tol: 1e-8, max_dim: 64 }
    }
}

/// `i^p · sign` as a complex unit.
pub(crate) fn unit_phase(p: usize, negative: bool) -> Complex64 {
    let z = match p % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    if negative { -z } else { z }
}

/// Output state for input `|n, 0⟩` without thermal noise: the pure state
/// `Σ_k √C(n,k) cos^kθ (i sinθ)^{n−k} |k, n−k⟩`, written element by element
/// with phases `(−1)^{n+k′} (i sinθ)^{2n−k−k′}`.
pub fn pure_output_density(n: usize, theta: f64, dims: Option<(usize, usize)>) -> Result<FockDensityMatrix> {
    pure_output_density_with(n, theta, dims, &FockConfig::default())
}

pub fn pure_output_density_with(
    n: usize,
    theta: f64,
    dims: Option<(usize, usize)>,
    cfg: &FockConfig,
) -> Result<FockDensityMatrix> {
    if n > cfg.max_n {
        return Err(FockError::Domain(format!("n = {n} exceeds the configured maximum {}", cfg.max_n)));
    }
    let (da, db) = dims.unwrap_or((n + 1, n + 1));
    if da < n + 1 || db < n + 1 {
        return Err(FockError::Dimension(format!(
            "dims {da}x{db} cannot hold n = {n}; need at least {}x{}",
            n + 1,
            n + 1
        )));
    }
    let lf = LogFactorials::new(n);
    let (s, c) = theta.sin_cos();
    let rho = FockDensityMatrix::from_fn(da, db, |m, mp, l, lp| {
        if m + mp != n || l + lp != n {
            return Complex64::new(0.0, 0.0);
        }
        let (k, kp) = (m, l);
        let ln_mag = lf.ln_factorial(n)
            - 0.5 * (lf.ln_factorial(k) + lf.ln_factorial(n - k) + lf.ln_factorial(kp) + lf.ln_factorial(n - kp));
        let pc = k + kp;
        let ps = 2 * n - k - kp;
        let mag = ln_mag.exp() * c.abs().powi(pc as i32) * s.abs().powi(ps as i32);
        let negative = ((n + kp) % 2 == 1) ^ (c < 0.0 && pc % 2 == 1) ^ (s < 0.0 && ps % 2 == 1);
        unit_phase(ps, negative) * mag
    });
    Ok(rho)
}

/// `N_n = ½(Σ_k Λ_k)² − ½` with `Λ_k = √C(n,k)·|cosθ|^k·|sinθ|^{n−k}`.
pub fn pure_fock_negativity(n: usize, theta: f64) -> f64 {
    let lf = LogFactorials::new(n);
    let (s, c) = theta.sin_cos();
    let sum: f64 = (0..=n)
        .map(|k| (0.5 * lf.ln_binomial(n, k)).exp() * c.abs().powi(k as i32) * s.abs().powi((n - k) as i32))
        .sum();
    (0.5 * sum * sum - 0.5).max(0.0)
}

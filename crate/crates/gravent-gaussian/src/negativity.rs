use crate::covariance::CovMat4;
use crate::error::{GaussianError, Result};
use crate::params::ChannelParams;
use crate::real::Real;

/// `ν_- ≥ 1 − SEPARABILITY_TOL` counts as separable.
pub const SEPARABILITY_TOL: f64 = 1e-10;
/// Discriminant round-off allowance, relative to `max(1, σ̃²)`.
pub const DISCRIMINANT_TOL: f64 = 1e-9;

/// Smallest symplectic eigenvalue of the partially transposed state,
/// `ν_-² = (σ̃ − √(σ̃² − 4 det V)) / 2` with `σ̃ = det A + det B − 2 det C`.
///
/// Evaluated as `2 det V / (σ̃ + √(σ̃² − 4 det V))` to avoid the subtraction.
pub fn ppt_min_symplectic_eigenvalue<T: Real>(v: &CovMat4<T>) -> Result<T> {
    let (da, db, dc) = v.block_dets();
    let sigma = da + db - T::two() * dc;
    let det = v.det();
    let disc = sigma * sigma - T::of(4.0) * det;
    let scale = (sigma * sigma).as_f64().max(1.0);
    let disc = if disc < T::zero() {
        if disc.as_f64() < -DISCRIMINANT_TOL * scale {
            return Err(GaussianError::Numerical(format!(
                "negative discriminant {:e} (sigma = {:e})",
                disc.as_f64(),
                sigma.as_f64()
            )));
        }
        T::zero()
    } else {
        disc
    };
    let denom = sigma + disc.sqrt();
    if !(denom > T::zero()) || !(det > T::zero()) {
        return Err(GaussianError::Numerical(format!(
            "degenerate spectrum: det V = {:e}, sigma = {:e}",
            det.as_f64(),
            sigma.as_f64()
        )));
    }
    Ok((T::two() * det / denom).sqrt())
}

/// `max(0, (1/ν_- − 1)/2)`, and exactly zero for every ν_- the separability
/// verdict accepts, so round-off on separable states never shows up as
/// spurious entanglement.
pub fn negativity_from_nu(nu: f64) -> f64 {
    if is_separable_nu(nu) {
        0.0
    } else {
        0.5 * (1.0 / nu - 1.0)
    }
}

pub fn is_separable_nu(nu: f64) -> bool {
    nu >= 1.0 - SEPARABILITY_TOL
}

pub fn gaussian_negativity<T: Real>(v: &CovMat4<T>) -> Result<f64> {
    Ok(negativity_from_nu(ppt_min_symplectic_eigenvalue(v)?.as_f64()))
}

/// ν_- of an aligned squeezed pair sent through the channel and loss.
///
/// The output has the form `a·R V_in Rᵀ + b·1`, so this is exact for every
/// damping, not only γ_m t_G ≪ 1. Requires the same η and n̄ on both arms.
pub fn closed_form_nu_squeezed(zeta: f64, p: &ChannelParams) -> Result<f64> {
    p.validate()?;
    if p.eta_a != p.eta_b || p.nbar_a != p.nbar_b {
        return Err(GaussianError::Domain(
            "closed form requires identical loss on both arms".into(),
        ));
    }
    let eta = p.eta_a;
    let tau_c = -(-2.0 * p.damping).exp_m1();
    let a = eta * (-2.0 * p.damping).exp();
    let b = eta * 2.0 * tau_c * p.n_th + (1.0 - eta) * (2.0 * p.nbar_a + 1.0);
    Ok(squeezed_nu(a, b, zeta, p.theta))
}

/// Closed-form negativity of the aligned squeezed pair, clamped at zero.
pub fn closed_form_negativity_squeezed(zeta: f64, p: &ChannelParams) -> Result<f64> {
    Ok(negativity_from_nu(closed_form_nu_squeezed(zeta, p)?))
}

/// The weak-damping expression in terms of `thermal = γ_m t_G N_th`:
/// `e^{−2γt} → 1` and `2(1 − e^{−2γt}) N_th → 4·thermal`.
pub fn weak_damping_nu_squeezed(zeta: f64, theta: f64, thermal: f64, eta: f64) -> f64 {
    squeezed_nu(eta, 4.0 * eta * thermal + 1.0 - eta, zeta, theta)
}

pub fn weak_damping_negativity_squeezed(zeta: f64, theta: f64, thermal: f64, eta: f64) -> f64 {
    negativity_from_nu(weak_damping_nu_squeezed(zeta, theta, thermal, eta))
}

// ν = √F − a|sinh2ζ sin2θ| with F = (a cosh2ζ + b)² − a² sinh²2ζ cos²2θ,
// rationalised: F − a² sinh²2ζ sin²2θ = a² + 2ab cosh2ζ + b².
fn squeezed_nu(a: f64, b: f64, zeta: f64, theta: f64) -> f64 {
    let ch = (2.0 * zeta).cosh();
    let sh = (2.0 * zeta).sinh().abs();
    let s2 = (2.0 * theta).sin().abs();
    let f = a * a * (1.0 + sh * sh * s2 * s2) + 2.0 * a * b * ch + b * b;
    let num = a * a + 2.0 * a * b * ch + b * b;
    num / (f.sqrt() + a * sh * s2)
}

use crate::error::{BoundsError, Result};

/// `g_G − 2γ_m N_th`, in the units of the inputs.
pub fn universal_threshold_margin(g_g: f64, gamma_m: f64, n_th: f64) -> f64 {
    g_g - 2.0 * gamma_m * n_th
}

/// `4·thermal < √(cosh²2ζ + 2|sinh2ζ·sin2θ|) − cosh2ζ`, with
/// `thermal = γ_m t_G N_th`.
pub fn finite_squeezing_condition(zeta: f64, theta: f64, thermal: f64) -> bool {
    4.0 * thermal < squeezing_gain(zeta, theta, 1.0)
}

/// Lossy counterpart: `4η·thermal < f(ζ)` with `f` from [`squeezing_gain`].
pub fn lossy_finite_squeezing_condition(zeta: f64, theta: f64, thermal: f64, eta: f64) -> bool {
    4.0 * eta * thermal < squeezing_gain(zeta, theta, eta)
}

/// `f(ζ) = √(1 + 2η S|sin2θ| + η²S²) − η cosh2ζ − (1 − η)` with
/// `S = |sinh2ζ|`. The aligned squeezed pair is entangled after the channel
/// exactly when `4η·thermal < f(ζ)` (weak damping).
///
/// Evaluated in a cancellation-free form.
pub fn squeezing_gain(zeta: f64, theta: f64, eta: f64) -> f64 {
    let s = (2.0 * zeta).sinh().abs();
    let ch = (2.0 * zeta).cosh();
    let s2 = (2.0 * theta).sin().abs();
    let base = eta * ch + 1.0 - eta;
    let root = (1.0 + 2.0 * eta * s * s2 + eta * eta * s * s).sqrt();
    // root² − base² = 2ηS|sin2θ| − 2η(1 − η)(cosh2ζ − 1)
    let diff = 2.0 * eta * s * s2 - 2.0 * eta * (1.0 - eta) * (ch - 1.0);
    diff / (root + base)
}

/// Which EB criterion to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EbForm {
    /// `2 tanh(γ_m t_G) N_th ≥ 1`.
    #[default]
    Exact,
    /// `2 γ_m t_G N_th ≥ 1`.
    SmallDamping,
}

/// `(EA, EB)`: EA is `4γ_m t_G N_th ≥ 1`, EB the exact tanh form.
pub fn ea_eb_conditions(damping: f64, n_th: f64) -> (bool, bool) {
    ea_eb_conditions_with(damping, n_th, EbForm::Exact)
}

pub fn ea_eb_conditions_with(damping: f64, n_th: f64, form: EbForm) -> (bool, bool) {
    let ea = 4.0 * damping * n_th >= 1.0;
    let eb = match form {
        EbForm::Exact => 2.0 * damping.tanh() * n_th >= 1.0,
        EbForm::SmallDamping => 2.0 * damping * n_th >= 1.0,
    };
    (ea, eb)
}

/// `4η·thermal − (√((1−η)² + 4η sin²θ) − (1−η))`; nonnegative means no
/// input is entangled after loss.
pub fn lossy_bound_margin(theta: f64, thermal: f64, eta: f64) -> Result<f64> {
    check_eta(eta)?;
    let l = 1.0 - eta;
    let s = theta.sin();
    let root = (l * l + 4.0 * eta * s * s).sqrt();
    // root − l without cancellation
    Ok(4.0 * eta * thermal - 4.0 * eta * s * s / (root + l))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalSqueezing {
    /// `INFINITY` when the gain keeps growing with ζ.
    pub zeta: f64,
    pub tanh_2zeta: f64,
    pub infinite: bool,
}

/// Squeezing that maximises [`squeezing_gain`] at fixed `θ, η`.
///
/// The stationary point `tanh2ζ* = |sin2θ| / √((1−η)² + 4η sin²θ)` is the
/// maximum when `sin²2θ < 1 − η²`. Otherwise the gain increases for all ζ.
pub fn optimal_squeezing(theta: f64, eta: f64) -> Result<OptimalSqueezing> {
    check_eta(eta)?;
    let s2 = (2.0 * theta).sin().abs();
    let l = 1.0 - eta;
    if s2 * s2 >= l * (1.0 + eta) {
        return Ok(OptimalSqueezing { zeta: f64::INFINITY, tanh_2zeta: 1.0, infinite: true });
    }
    let s = theta.sin();
    let t = s2 / (l * l + 4.0 * eta * s * s).sqrt();
    Ok(OptimalSqueezing { zeta: 0.5 * t.atanh(), tanh_2zeta: t, infinite: false })
}

fn check_eta(eta: f64) -> Result<()> {
    if eta > 0.0 && eta <= 1.0 {
        Ok(())
    } else {
        Err(BoundsError::Domain(format!("eta must lie in (0, 1], got {eta}")))
    }
}

use gravent_bounds::{BoundReport, bound_report, lossy_bound_margin, omega_components, separability_preserved};
use gravent_fock::{min_pt_eigenvalue, ppt_negativity, pure_output_density, thermal_output_density};
use gravent_gaussian::{
    ChannelParams, Dd, Real, apply_loss, closed_form_nu_squeezed, evolve, gravity_channel_in, input_squeezed_pair,
    SEPARABILITY_TOL, negativity_from_nu, ppt_min_symplectic_eigenvalue,
};

use crate::spec::{Mode, Point};

/// `|ν_- − 1|` below this is flagged as near the threshold.
pub const NEAR_THRESHOLD: f64 = 1e-6;
/// Fock negativity at or below this counts as vanished.
pub const FOCK_NEGATIVITY_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub negativity: f64,
    /// ν_- for Gaussian modes, smallest partial-transpose eigenvalue for Fock modes.
    pub nu_minus: f64,
    pub flag: String,
    pub report: Option<BoundReport>,
}

fn params(p: &Point) -> ChannelParams {
    ChannelParams::new(p.theta, p.damping, p.n_th).with_eta(p.eta)
}

fn gaussian_nu(mode: Mode, p: &Point) -> Result<f64, String> {
    let cp = params(p);
    match mode {
        Mode::GaussianNumeric => {
            let ch = gravity_channel_in::<Dd>(&cp).map_err(|e| e.to_string())?;
            let out = apply_loss(&evolve(&input_squeezed_pair::<Dd>(p.zeta), &ch), &cp).map_err(|e| e.to_string())?;
            Ok(ppt_min_symplectic_eigenvalue(&out).map_err(|e| e.to_string())?.as_f64())
        }
        _ => closed_form_nu_squeezed(p.zeta, &cp).map_err(|e| e.to_string()),
    }
}

fn fock_state(mode: Mode, p: &Point, dims: Option<(usize, usize)>) -> Result<gravent_fock::FockDensityMatrix, String> {
    match mode {
        Mode::FockPure => pure_output_density(p.n, p.theta, dims),
        _ => thermal_output_density(p.n, p.theta, p.damping, p.n_th, dims),
    }
    .map_err(|e| e.to_string())
}

pub fn evaluate(mode: Mode, p: &Point, dims: Option<(usize, usize)>) -> Evaluation {
    let failed = |msg: String| Evaluation { negativity: f64::NAN, nu_minus: f64::NAN, flag: msg, report: None };
    match mode {
        Mode::FockPure | Mode::FockThermal => {
            let rho = match fock_state(mode, p, dims) {
                Ok(r) => r,
                Err(e) => return failed(e),
            };
            match (ppt_negativity(&rho), min_pt_eigenvalue(&rho)) {
                (Ok(neg), Ok(min)) => {
                    let near = neg > 0.0 && neg <= 1e-9;
                    Evaluation {
                        negativity: neg.max(0.0),
                        nu_minus: min,
                        flag: if near { "near-threshold" } else { "ok" }.into(),
                        report: None,
                    }
                }
                (Err(e), _) | (_, Err(e)) => failed(e.to_string()),
            }
        }
        _ => {
            let nu = match gaussian_nu(mode, p) {
                Ok(nu) => nu,
                Err(e) => return failed(e),
            };
            let report = if mode == Mode::Bounds {
                match bound_report(p.theta, p.damping, p.n_th, p.eta, Some(p.zeta)) {
                    Ok(r) => Some(r),
                    Err(e) => return failed(e.to_string()),
                }
            } else {
                None
            };
            let flag = if (nu - 1.0).abs() < NEAR_THRESHOLD { "near-threshold" } else { "ok" };
            Evaluation { negativity: negativity_from_nu(nu), nu_minus: nu, flag: flag.into(), report }
        }
    }
}

/// Quantity whose zero marks a boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// Where the negativity of the evaluated state vanishes.
    NegativityZero,
    /// Zero of the lossy bound margin.
    LossyMargin,
    /// Zero of `λ_min(Ω)`.
    SeparabilityMargin,
}

/// Positive on the entangled side, nonpositive on the separable side.
pub fn entanglement_signal(mode: Mode, target: Target, p: &Point, dims: Option<(usize, usize)>) -> Result<f64, String> {
    match target {
        Target::NegativityZero => match mode {
            Mode::FockPure | Mode::FockThermal => {
                let rho = fock_state(mode, p, dims)?;
                Ok(ppt_negativity(&rho).map_err(|e| e.to_string())? - FOCK_NEGATIVITY_FLOOR)
            }
            _ => {
                let nu = gaussian_nu(mode, p)?;
                Ok((1.0 - SEPARABILITY_TOL) - nu)
            }
        },
        Target::LossyMargin => Ok(-lossy_bound_margin(p.theta, p.thermal(), p.eta).map_err(|e| e.to_string())?),
        Target::SeparabilityMargin => {
            let oc = omega_components(p.theta, p.damping, p.n_th, p.eta).map_err(|e| e.to_string())?;
            Ok(-separability_preserved(&oc).margin)
        }
    }
}

use crate::conditions::{ea_eb_conditions, finite_squeezing_condition, lossy_bound_margin, lossy_finite_squeezing_condition};
use crate::error::Result;
use crate::omega::{omega_components, separability_preserved};

/// Every bound evaluated at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub theta: f64,
    pub damping: f64,
    pub n_th: f64,
    pub eta: f64,
    /// `1 − 2γ_m N_th / g_G`.
    pub universal_margin: f64,
    pub separability_preserved: bool,
    pub separability_margin: f64,
    pub converse_proven: bool,
    pub ea: bool,
    pub eb: bool,
    pub lossy_margin: f64,
    pub finite_squeezing_ok: Option<bool>,
}

pub const CSV_HEADER: &str = "theta,damping,n_th,eta,universal_margin,sep_preserved,ea,eb,lossy_margin";

impl BoundReport {
    pub fn csv_row(&self) -> String {
        format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{},{},{},{:.16e}",
            self.theta,
            self.damping,
            self.n_th,
            self.eta,
            self.universal_margin,
            self.separability_preserved,
            self.ea,
            self.eb,
            self.lossy_margin
        )
    }
}

pub fn bound_report(theta: f64, damping: f64, n_th: f64, eta: f64, zeta: Option<f64>) -> Result<BoundReport> {
    let oc = omega_components(theta, damping, n_th, eta)?;
    let sep = separability_preserved(&oc);
    let (ea, eb) = ea_eb_conditions(damping, n_th);
    let thermal = damping * n_th;
    let finite_squeezing_ok = zeta.map(|z| {
        if eta == 1.0 {
            finite_squeezing_condition(z, theta, thermal)
        } else {
            lossy_finite_squeezing_condition(z, theta, thermal, eta)
        }
    });
    Ok(BoundReport {
        theta,
        damping,
        n_th,
        eta,
        universal_margin: 1.0 - 2.0 * thermal / theta,
        separability_preserved: sep.preserved,
        separability_margin: sep.margin,
        converse_proven: sep.converse_proven,
        ea,
        eb,
        lossy_margin: lossy_bound_margin(theta, thermal, eta)?,
        finite_squeezing_ok,
    })
}

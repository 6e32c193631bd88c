use gravent_gaussian::{ChannelParams, Dd, apply_loss, evolve, gaussian_negativity, gravity_channel_in, input_squeezed_pair};

use crate::error::{BoundsError, Result};

/// Slack on `Ω₁ ≥ √(Ω₂² + Ω₃²)`.
pub const OMEGA_TOL: f64 = 1e-12;
/// Squeezing used where the witness needs `ζ → ∞`.
pub const WITNESS_SENTINEL: f64 = 20.0;

/// Entries of the 2×2 matrix `[[Ω₁ + Ω₂, Ω₃], [Ω₃, Ω₁ − Ω₂]]` whose
/// positivity decides whether every separable input stays separable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaComponents {
    pub o1: f64,
    pub o2: f64,
    pub o3: f64,
    pub lossy: bool,
    pub eta: f64,
}

impl OmegaComponents {
    /// `λ_min(Ω) = Ω₁ − √(Ω₂² + Ω₃²)`.
    pub fn min_eigenvalue(&self) -> f64 {
        self.o1 - self.o2.hypot(self.o3)
    }
}

/// Lossless form for `η = 1`, lossy form otherwise.
pub fn omega_components(theta: f64, damping: f64, n_th: f64, eta: f64) -> Result<OmegaComponents> {
    if !theta.is_finite() || !(damping >= 0.0) || !(n_th >= 0.0) || !damping.is_finite() || !n_th.is_finite() {
        return Err(BoundsError::Domain(format!(
            "invalid channel parameters theta = {theta}, damping = {damping}, n_th = {n_th}"
        )));
    }
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(BoundsError::Domain(format!("eta must lie in (0, 1], got {eta}")));
    }
    let e2 = (2.0 * damping).exp();
    let (s2, c2) = (2.0 * theta).sin_cos();
    if eta == 1.0 {
        // 4 e^{d} N_th sinh d = 2(e^{2d} − 1) N_th
        Ok(OmegaComponents {
            o1: 2.0 * (2.0 * damping).exp_m1() * n_th,
            o2: e2 * c2 - 1.0,
            o3: e2 * s2,
            lossy: false,
            eta,
        })
    } else {
        Ok(OmegaComponents {
            o1: 2.0 * (2.0 * damping).exp_m1() * n_th + e2 * (1.0 / eta - 1.0),
            o2: e2 * c2 / eta - 1.0,
            o3: e2 * s2 / eta,
            lossy: true,
            eta,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparabilityVerdict {
    pub preserved: bool,
    /// `Ω₁ − √(Ω₂² + Ω₃²)`.
    pub margin: f64,
    /// `Ω₂ ≥ 0`: a violated bound is known to admit an entangling input.
    /// Otherwise a negative margin is only inconclusive.
    pub converse_proven: bool,
}

pub fn separability_preserved(oc: &OmegaComponents) -> SeparabilityVerdict {
    let margin = oc.min_eigenvalue();
    SeparabilityVerdict { preserved: margin >= -OMEGA_TOL, margin, converse_proven: oc.o2 >= 0.0 }
}

/// Input squeezing that exposes a violated bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WitnessSqueezing {
    /// `e^{2ζ} = Ω₂ / (Ω₁ − |Ω₃|)`.
    Finite(f64),
    /// `Ω₁ ≤ |Ω₃|`: any large squeezing works; stands in for `ζ → ∞`.
    Sentinel,
    /// `Ω₂ < 0`, outside the regime where the converse holds.
    SufficientOnly,
}

impl WitnessSqueezing {
    pub fn zeta(&self) -> Option<f64> {
        match *self {
            WitnessSqueezing::Finite(z) => Some(z),
            WitnessSqueezing::Sentinel => Some(WITNESS_SENTINEL),
            WitnessSqueezing::SufficientOnly => None,
        }
    }
}

pub fn witness_squeezing(oc: &OmegaComponents) -> Result<WitnessSqueezing> {
    let lambda = oc.min_eigenvalue();
    if !(lambda < 0.0) {
        return Err(BoundsError::Precondition(format!(
            "witness needs a negative Omega eigenvalue, got {lambda:e}"
        )));
    }
    if oc.o2 < 0.0 {
        return Ok(WitnessSqueezing::SufficientOnly);
    }
    let gap = oc.o1 - oc.o3.abs();
    if gap <= 0.0 {
        return Ok(WitnessSqueezing::Sentinel);
    }
    Ok(WitnessSqueezing::Finite(0.5 * (oc.o2 / gap).ln()))
}

/// Negativity of the squeezed pair after channel and loss, in double-double
/// so that the sentinel squeezing is resolved.
pub fn squeezed_pair_negativity(p: &ChannelParams, zeta: f64) -> Result<f64> {
    let ch = gravity_channel_in::<Dd>(p)?;
    let out = apply_loss(&evolve(&input_squeezed_pair::<Dd>(zeta), &ch), p)?;
    Ok(gaussian_negativity(&out)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_point_is_zero() {
        let oc = omega_components(0.0, 0.0, 0.0, 1.0).unwrap();
        assert_eq!((oc.o1, oc.o2, oc.o3), (0.0, 0.0, 0.0));
        let v = separability_preserved(&oc);
        assert!(v.preserved);
        assert_eq!(v.margin, 0.0);
        assert!(matches!(witness_squeezing(&oc), Err(BoundsError::Precondition(_))));
    }

    #[test]
    fn series_example() {
        let oc = omega_components(1e-4, 1e-6, 1e6, 1.0).unwrap();
        assert!((oc.o1 - 4.0).abs() < 1e-5);
        assert!((oc.o3 - 2e-4).abs() < 1e-9);
        let series_o1 = 4.0 * 1e-6 * 1e6 * (1.0 + 1e-6);
        assert!((oc.o1 - series_o1).abs() < 1e-11);
    }

    #[test]
    fn lossy_form_tends_to_lossless() {
        let a = omega_components(0.3, 0.01, 2.0, 1.0).unwrap();
        let b = omega_components(0.3, 0.01, 2.0, 1.0 - 1e-12).unwrap();
        assert!(b.lossy && !a.lossy);
        for (x, y) in [(a.o1, b.o1), (a.o2, b.o2), (a.o3, b.o3)] {
            assert!((x - y).abs() < 1e-10);
        }
        assert!(omega_components(0.3, 0.01, 2.0, 0.0).is_err());
        assert!(omega_components(0.3, 0.01, 2.0, 1.2).is_err());
    }

    #[test]
    fn o1_is_nonnegative() {
        for eta in [0.1, 0.5, 0.99, 1.0] {
            for d in [0.0, 1e-6, 0.5] {
                assert!(omega_components(0.7, d, 0.0, eta).unwrap().o1 >= 0.0);
            }
        }
    }

    #[test]
    fn threshold_regime_verdicts() {
        let theta = 1e-3;
        let d = 1e-6;
        // g_G = 4γN_th: half the noise needed, entangling.
        let weak = omega_components(theta, d, theta / (4.0 * d), 1.0).unwrap();
        assert!(!separability_preserved(&weak).preserved);
        // g_G = γN_th: twice the noise needed, separable.
        let strong = omega_components(theta, d, theta / d, 1.0).unwrap();
        assert!(separability_preserved(&strong).preserved);
    }

    #[test]
    fn witness_cases() {
        // Ω₂ ≥ 0 needs θ² ≲ d.
        let (theta, d) = (1e-4, 1e-6);
        let oc = omega_components(theta, d, 10.0, 1.0).unwrap();
        assert!(oc.o2 > 0.0 && oc.o1 < oc.o3.abs());
        let w = witness_squeezing(&oc).unwrap();
        assert_eq!(w, WitnessSqueezing::Sentinel);
        let n = squeezed_pair_negativity(&ChannelParams::new(theta, d, 10.0), w.zeta().unwrap()).unwrap();
        assert!(n > 1e-12);

        let oc = OmegaComponents { o1: 1.0, o2: 3.0, o3: 0.5, lossy: false, eta: 1.0 };
        match witness_squeezing(&oc).unwrap() {
            WitnessSqueezing::Finite(z) => assert!((z - 0.5 * 6f64.ln()).abs() < 1e-15),
            other => panic!("{other:?}"),
        }
        let oc = OmegaComponents { o1: 0.1, o2: -1.0, o3: 0.5, lossy: false, eta: 1.0 };
        assert_eq!(witness_squeezing(&oc).unwrap(), WitnessSqueezing::SufficientOnly);
    }
}

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use crate::error::{Result, SweepError};

/// Damping `γ_m t_G` used when only the product with `N_th` is given.
pub const DEFAULT_DAMPING: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    GaussianClosedForm,
    GaussianNumeric,
    FockPure,
    FockThermal,
    Bounds,
}

impl Mode {
    pub const ALL: [Mode; 5] =
        [Mode::GaussianClosedForm, Mode::GaussianNumeric, Mode::FockPure, Mode::FockThermal, Mode::Bounds];

    pub fn name(self) -> &'static str {
        match self {
            Mode::GaussianClosedForm => "gaussian-closed-form",
            Mode::GaussianNumeric => "gaussian-numeric",
            Mode::FockPure => "fock-pure",
            Mode::FockThermal => "fock-thermal",
            Mode::Bounds => "bounds",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = SweepError;
    fn from_str(s: &str) -> Result<Self> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| SweepError::Spec(format!("unknown mode '{s}'")))
    }
}

/// Sweepable coordinates. `Thermal` is `γ_m t_G N_th / 2π`, `Ratio` is
/// `g_G / (2γ_m N_th)`; both fix `γ_m t_G N_th` given `θ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Thermal,
    ThetaOver2Pi,
    Ratio,
    Eta,
    Zeta,
    N,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::Thermal, Var::ThetaOver2Pi, Var::Ratio, Var::Eta, Var::Zeta, Var::N];

    pub fn name(self) -> &'static str {
        match self {
            Var::Thermal => "thermal_over_2pi",
            Var::ThetaOver2Pi => "theta_over_2pi",
            Var::Ratio => "ratio",
            Var::Eta => "eta",
            Var::Zeta => "zeta",
            Var::N => "n",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = SweepError;
    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "thermal" | "thermal-over-2pi" => "thermal_over_2pi",
            "theta" | "theta-over-2pi" => "theta_over_2pi",
            other => other,
        };
        Var::ALL
            .into_iter()
            .find(|v| v.name() == alias)
            .ok_or_else(|| SweepError::Spec(format!("unknown axis '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub enum AxisValues {
    Range { min: f64, max: f64, count: usize, spacing: Spacing },
    /// Explicit values, used for small discrete sets such as ζ ∈ {1, 2, 5}.
    List(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub var: Var,
    pub values: AxisValues,
}

impl Axis {
    pub fn range(var: Var, min: f64, max: f64, count: usize, spacing: Spacing) -> Self {
        Axis { var, values: AxisValues::Range { min, max, count, spacing } }
    }

    pub fn list(var: Var, values: &[f64]) -> Self {
        Axis { var, values: AxisValues::List(values.to_vec()) }
    }

    pub fn validate(&self) -> Result<()> {
        match &self.values {
            AxisValues::Range { min, max, count, spacing } => {
                if *count < 2 {
                    return Err(SweepError::Spec(format!("axis {} needs at least 2 points", self.var)));
                }
                if !min.is_finite() || !max.is_finite() {
                    return Err(SweepError::Spec(format!("axis {} has non-finite bounds", self.var)));
                }
                if *spacing == Spacing::Log && !(*min > 0.0 && *max > 0.0) {
                    return Err(SweepError::Spec(format!("log axis {} needs positive bounds", self.var)));
                }
            }
            AxisValues::List(v) => {
                if v.is_empty() || v.iter().any(|x| !x.is_finite()) {
                    return Err(SweepError::Spec(format!("axis {} needs finite values", self.var)));
                }
            }
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        match &self.values {
            AxisValues::List(v) => v.clone(),
            AxisValues::Range { min, max, count, spacing } => {
                let last = (*count - 1) as f64;
                (0..*count)
                    .map(|i| {
                        let t = i as f64 / last;
                        if i == 0 {
                            return *min;
                        }
                        if i + 1 == *count {
                            return *max;
                        }
                        match spacing {
                            Spacing::Linear => min + (max - min) * t,
                            Spacing::Log => (min.ln() + (max.ln() - min.ln()) * t).exp(),
                        }
                    })
                    .collect()
            }
        }
    }
}

/// Parameters held fixed over a sweep; axes override them.
#[derive(Debug, Clone, PartialEq)]
pub struct Fixed {
    pub theta_over_2pi: Option<f64>,
    pub thermal_over_2pi: Option<f64>,
    pub ratio: Option<f64>,
    pub damping: f64,
    pub eta: f64,
    pub zeta: f64,
    pub n: usize,
    pub dims: Option<(usize, usize)>,
}

impl Default for Fixed {
    fn default() -> Self {
        Fixed {
            theta_over_2pi: None,
            thermal_over_2pi: None,
            ratio: None,
            damping: DEFAULT_DAMPING,
            eta: 1.0,
            zeta: 1.0,
            n: 1,
            dims: None,
        }
    }
}

/// Fully resolved physical point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub theta: f64,
    pub damping: f64,
    pub n_th: f64,
    pub eta: f64,
    pub zeta: f64,
    pub n: usize,
}

impl Point {
    /// `γ_m t_G N_th`.
    pub fn thermal(&self) -> f64 {
        self.damping * self.n_th
    }
}

impl Fixed {
    /// Applies `overrides` (axis values) and converts to physical parameters.
    pub fn resolve(&self, overrides: &[(Var, f64)]) -> Result<Point> {
        let mut theta = self.theta_over_2pi;
        let mut thermal = self.thermal_over_2pi;
        let mut ratio = self.ratio;
        let mut eta = self.eta;
        let mut zeta = self.zeta;
        let mut n = self.n;
        let axis_noise = overrides.iter().filter(|(v, _)| matches!(v, Var::Thermal | Var::Ratio)).count();
        if axis_noise > 1 {
            return Err(SweepError::Spec("thermal and ratio axes conflict".into()));
        }
        if axis_noise == 1 {
            thermal = None;
            ratio = None;
        }
        for &(v, x) in overrides {
            match v {
                Var::Thermal => thermal = Some(x),
                Var::ThetaOver2Pi => theta = Some(x),
                Var::Ratio => ratio = Some(x),
                Var::Eta => eta = x,
                Var::Zeta => zeta = x,
                Var::N => {
                    if x < 0.0 || x.fract() != 0.0 {
                        return Err(SweepError::Spec(format!("photon number must be a nonnegative integer, got {x}")));
                    }
                    n = x as usize;
                }
            }
        }
        let theta_over = theta.ok_or_else(|| SweepError::Spec("theta_over_2pi is not set".into()))?;
        let dn = match (thermal, ratio) {
            (Some(_), Some(_)) => return Err(SweepError::Spec("thermal and ratio both set".into())),
            (Some(t), None) => TAU * t,
            (None, Some(r)) => {
                if !(r > 0.0) {
                    return Err(SweepError::Spec(format!("ratio must be positive, got {r}")));
                }
                TAU * theta_over / (2.0 * r)
            }
            (None, None) => 0.0,
        };
        if !(self.damping > 0.0) && dn != 0.0 {
            return Err(SweepError::Spec("damping must be positive when thermal noise is set".into()));
        }
        if !(dn >= 0.0) {
            return Err(SweepError::Spec(format!("thermal coordinate must be nonnegative, got {dn}")));
        }
        if !(eta > 0.0 && eta <= 1.0) {
            return Err(SweepError::Spec(format!("eta must lie in (0, 1], got {eta}")));
        }
        // Without thermal noise the bath coupling is dropped as well, so the
        // point is the noiseless limit rather than a sub-vacuum decay.
        let (damping, n_th) = if dn == 0.0 { (0.0, 0.0) } else { (self.damping, dn / self.damping) };
        Ok(Point { theta: TAU * theta_over, damping, n_th, eta, zeta, n })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub mode: Mode,
    pub fixed: Fixed,
    pub axes: Vec<Axis>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.axes.is_empty() || self.axes.len() > 2 {
            return Err(SweepError::Spec(format!("need one or two axes, got {}", self.axes.len())));
        }
        if self.axes.len() == 2 && self.axes[0].var == self.axes[1].var {
            return Err(SweepError::Spec(format!("axis {} given twice", self.axes[0].var)));
        }
        for a in &self.axes {
            a.validate()?;
        }
        let vars: Vec<Var> = self.axes.iter().map(|a| a.var).collect();
        if vars.contains(&Var::Thermal) && vars.contains(&Var::Ratio) {
            return Err(SweepError::Spec("thermal and ratio axes conflict".into()));
        }
        if self.fixed.thermal_over_2pi.is_some() && self.fixed.ratio.is_some() {
            return Err(SweepError::Spec("thermal and ratio both fixed".into()));
        }
        if !(self.fixed.damping >= 0.0) || !self.fixed.damping.is_finite() {
            return Err(SweepError::Spec(format!("damping must be nonnegative, got {}", self.fixed.damping)));
        }
        Ok(())
    }
}

use rayon::prelude::*;

use crate::error::{Result, SweepError};
use crate::eval::{Target, entanglement_signal};
use crate::spec::{Axis, Fixed, Mode, Var};
use crate::table::{Cell, Table};

/// Default bisection half-width, relative to the crossing value.
pub const DEFAULT_TOLERANCE: f64 = 1e-4;
const MONOTONE_SAMPLES: usize = 9;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryTraceSpec {
    pub mode: Mode,
    pub fixed: Fixed,
    pub scan: Axis,
    pub bisect: Var,
    pub bracket: (f64, f64),
    /// Bisect on a logarithmic scale.
    pub log: bool,
    pub target: Target,
    pub tolerance: f64,
}

impl BoundaryTraceSpec {
    pub fn validate(&self) -> Result<()> {
        self.scan.validate()?;
        if self.scan.var == self.bisect {
            return Err(SweepError::Spec("scan and bisection axes coincide".into()));
        }
        if matches!(self.scan.var, Var::Thermal | Var::Ratio) && matches!(self.bisect, Var::Thermal | Var::Ratio) {
            return Err(SweepError::Spec("thermal and ratio axes conflict".into()));
        }
        let (lo, hi) = self.bracket;
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(SweepError::Spec(format!("bad bracket [{lo}, {hi}]")));
        }
        if self.log && !(lo > 0.0) {
            return Err(SweepError::Spec("log bisection needs a positive bracket".into()));
        }
        if !(self.tolerance > 0.0) {
            return Err(SweepError::Spec("tolerance must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Crossing {
    pub value: f64,
    pub flag: String,
}

/// Finds where `signal` changes sign on `[lo, hi]` by bisection, after
/// checking the bracket and sampling it for monotonicity.
pub fn find_crossing(
    signal: impl Fn(f64) -> std::result::Result<f64, String>,
    lo: f64,
    hi: f64,
    log: bool,
    tolerance: f64,
) -> Crossing {
    let nan = |flag: String| Crossing { value: f64::NAN, flag };
    let at = |t: f64| if log { (lo.ln() + (hi.ln() - lo.ln()) * t).exp() } else { lo + (hi - lo) * t };
    let mut samples = Vec::with_capacity(MONOTONE_SAMPLES);
    for i in 0..MONOTONE_SAMPLES {
        match signal(at(i as f64 / (MONOTONE_SAMPLES - 1) as f64)) {
            Ok(s) if s.is_finite() => samples.push(s),
            Ok(s) => return nan(format!("non-finite target {s}")),
            Err(e) => return nan(e),
        }
    }
    let (s_lo, s_hi) = (samples[0], samples[MONOTONE_SAMPLES - 1]);
    if (s_lo > 0.0) == (s_hi > 0.0) {
        return nan("no sign change in bracket".into());
    }
    let scale = samples.iter().fold(0.0f64, |m, s| m.max(s.abs()));
    let slack = 1e-12 * scale;
    let rising = samples.windows(2).all(|w| w[1] >= w[0] - slack);
    let falling = samples.windows(2).all(|w| w[1] <= w[0] + slack);
    let mut flag = if rising || falling { "ok" } else { "non-monotone" }.to_string();

    let lo_side = s_lo > 0.0;
    let (mut a, mut b) = (lo, hi);
    for _ in 0..400 {
        let mid = if log { (a * b).sqrt() } else { 0.5 * (a + b) };
        if 0.5 * (b - a) <= tolerance * mid.abs() || mid <= a || mid >= b {
            break;
        }
        match signal(mid) {
            Ok(s) if (s > 0.0) == lo_side => a = mid,
            Ok(_) => b = mid,
            Err(e) => {
                flag = e;
                return Crossing { value: f64::NAN, flag };
            }
        }
    }
    Crossing { value: if log { (a * b).sqrt() } else { 0.5 * (a + b) }, flag }
}

/// One row per scan value: `scan_value,crossing_value,flag`.
pub fn trace_boundary(spec: &BoundaryTraceSpec) -> Result<Table> {
    spec.validate()?;
    let scan = spec.scan.points();
    let rows: Vec<Vec<Cell>> = scan
        .par_iter()
        .map(|&x| {
            let c = find_crossing(
                |y| {
                    let p = spec.fixed.resolve(&[(spec.scan.var, x), (spec.bisect, y)]).map_err(|e| e.to_string())?;
                    entanglement_signal(spec.mode, spec.target, &p, spec.fixed.dims)
                },
                spec.bracket.0,
                spec.bracket.1,
                spec.log,
                spec.tolerance,
            );
            vec![Cell::Num(x), Cell::Num(c.value), Cell::Text(c.flag)]
        })
        .collect();
    Ok(Table { header: vec!["scan_value".into(), "crossing_value".into(), "flag".into()], rows })
}

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, SweepError};
use crate::eval::Target;
use crate::spec::{Axis, DEFAULT_DAMPING, Fixed, Mode, Spacing, SweepSpec, Var};
use crate::sweep::run_sweep;
use crate::table::{Cell, Table};
use crate::trace::{BoundaryTraceSpec, DEFAULT_TOLERANCE, trace_boundary};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Fig2Left,
    Fig2Right,
    Fig3,
    Fig4,
    Fig5,
    Fig6Left,
    Fig6Right,
}

impl Preset {
    pub const ALL: [Preset; 7] = [
        Preset::Fig2Left,
        Preset::Fig2Right,
        Preset::Fig3,
        Preset::Fig4,
        Preset::Fig5,
        Preset::Fig6Left,
        Preset::Fig6Right,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Preset::Fig2Left => "fig2-left",
            Preset::Fig2Right => "fig2-right",
            Preset::Fig3 => "fig3",
            Preset::Fig4 => "fig4",
            Preset::Fig5 => "fig5",
            Preset::Fig6Left => "fig6-left",
            Preset::Fig6Right => "fig6-right",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Preset::Fig2Left => "Fig. 2 left: squeezed-pair negativity vs thermal noise, zeta in {1, 2, 5}",
            Preset::Fig2Right => "Fig. 2 right: Fock-input negativity vs thermal noise, n in {1, 2, 5}",
            Preset::Fig3 => "Fig. 3: bounds over (theta/2pi, ratio) with universal, EA and EB lines",
            Preset::Fig4 => "Fig. 4: lossy (eta = 0.999) negativity vs thermal noise, zeta in {0.2, 0.5, 2}",
            Preset::Fig5 => "Fig. 5: traced negativity boundaries in (theta/2pi, ratio) over eta and zeta",
            Preset::Fig6Left => "Fig. 6 left: negativity over (eta, ratio) at theta/2pi = 3.4e-2, zeta = 1",
            Preset::Fig6Right => "Fig. 6 right: negativity over (eta, zeta) at ratio 1.6, theta/2pi = 3.4e-2",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Preset {
    type Err = SweepError;
    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| SweepError::Spec(format!("unknown preset '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PresetOptions {
    pub damping: f64,
    /// Points per continuous axis.
    pub count: usize,
}

impl Default for PresetOptions {
    fn default() -> Self {
        PresetOptions { damping: DEFAULT_DAMPING, count: 41 }
    }
}

pub const FIG5_ETAS: [f64; 4] = [0.999, 0.9, 0.8, 0.7];
pub const FIG5_ZETAS: [f64; 4] = [0.1, 0.5, 1.0, 2.0];

/// Grid presets; `None` for the traced preset.
pub fn preset_sweep(p: Preset, o: &PresetOptions) -> Option<SweepSpec> {
    let n = o.count;
    let base = Fixed { damping: o.damping, ..Fixed::default() };
    let thermal_axis = Axis::range(Var::Thermal, 1e-6, 1e-4, n, Spacing::Log);
    let spec = match p {
        Preset::Fig2Left => SweepSpec {
            mode: Mode::GaussianClosedForm,
            fixed: Fixed { theta_over_2pi: Some(1e-4), ..base },
            axes: vec![Axis::list(Var::Zeta, &[1.0, 2.0, 5.0]), thermal_axis],
        },
        Preset::Fig2Right => SweepSpec {
            mode: Mode::FockThermal,
            fixed: Fixed { theta_over_2pi: Some(1e-4), ..base },
            axes: vec![Axis::list(Var::N, &[1.0, 2.0, 5.0]), thermal_axis],
        },
        Preset::Fig3 => SweepSpec {
            mode: Mode::Bounds,
            fixed: Fixed { zeta: 1.0, ..base },
            axes: vec![
                Axis::range(Var::ThetaOver2Pi, 1e-4, 1e-1, n, Spacing::Log),
                Axis::range(Var::Ratio, 0.1, 10.0, n, Spacing::Log),
            ],
        },
        Preset::Fig4 => SweepSpec {
            mode: Mode::Bounds,
            fixed: Fixed { theta_over_2pi: Some(1e-4), eta: 0.999, ..base },
            axes: vec![Axis::list(Var::Zeta, &[0.2, 0.5, 2.0]), thermal_axis],
        },
        Preset::Fig5 => return None,
        Preset::Fig6Left => SweepSpec {
            mode: Mode::Bounds,
            fixed: Fixed { theta_over_2pi: Some(3.4e-2), zeta: 1.0, ..base },
            axes: vec![
                Axis::range(Var::Eta, 0.5, 1.0, n, Spacing::Linear),
                Axis::range(Var::Ratio, 0.1, 10.0, n, Spacing::Log),
            ],
        },
        Preset::Fig6Right => SweepSpec {
            mode: Mode::Bounds,
            fixed: Fixed { theta_over_2pi: Some(3.4e-2), ratio: Some(1.6), ..base },
            axes: vec![
                Axis::range(Var::Eta, 0.5, 1.0, n, Spacing::Linear),
                Axis::range(Var::Zeta, 0.0, 3.0, 4 * (n - 1) + 1, Spacing::Linear),
            ],
        },
    };
    Some(spec)
}

/// Traces for the boundary preset, one per `(η, ζ)`.
pub fn fig5_traces(o: &PresetOptions) -> Vec<(f64, f64, BoundaryTraceSpec)> {
    let mut out = Vec::new();
    for eta in FIG5_ETAS {
        for zeta in FIG5_ZETAS {
            out.push((
                eta,
                zeta,
                BoundaryTraceSpec {
                    mode: Mode::GaussianClosedForm,
                    fixed: Fixed { damping: o.damping, eta, zeta, ..Fixed::default() },
                    scan: Axis::range(Var::ThetaOver2Pi, 1e-4, 1e-1, o.count, Spacing::Log),
                    bisect: Var::Ratio,
                    bracket: (1e-2, 1e4),
                    log: true,
                    target: Target::NegativityZero,
                    tolerance: DEFAULT_TOLERANCE,
                },
            ));
        }
    }
    out
}

pub fn run_preset(p: Preset, o: &PresetOptions) -> Result<Table> {
    if let Some(spec) = preset_sweep(p, o) {
        return run_sweep(&spec);
    }
    let mut table = Table::new(
        ["eta", "zeta", "scan_value", "crossing_value", "flag"].map(String::from).to_vec(),
    );
    for (eta, zeta, spec) in fig5_traces(o) {
        let t = trace_boundary(&spec)?;
        for row in t.rows {
            let mut r = vec![Cell::Num(eta), Cell::Num(zeta)];
            r.extend(row);
            table.rows.push(r);
        }
    }
    Ok(table)
}

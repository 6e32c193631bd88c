//! Parameter sweeps, boundary tracing and figure presets, with CSV output.
//!
//! Coordinates follow the figures: `theta_over_2pi = g_G t_G / 2π`,
//! `thermal_over_2pi = γ_m t_G N_th / 2π`, `ratio = g_G / (2γ_m N_th)`.
//! Either noise coordinate fixes `γ_m t_G N_th`; the damping `γ_m t_G` is a
//! separate knob (default 1e-6) from which `N_th` follows.

pub mod error;
pub mod eval;
pub mod presets;
pub mod spec;
pub mod sweep;
pub mod table;
pub mod trace;

pub use error::{Result, SweepError};
pub use eval::{Evaluation, FOCK_NEGATIVITY_FLOOR, NEAR_THRESHOLD, Target, entanglement_signal, evaluate};
pub use presets::{FIG5_ETAS, FIG5_ZETAS, Preset, PresetOptions, fig5_traces, preset_sweep, run_preset};
pub use spec::{Axis, AxisValues, DEFAULT_DAMPING, Fixed, Mode, Point, Spacing, SweepSpec, Var};
pub use sweep::run_sweep;
pub use table::{Cell, Table, emit_csv, format_float};
pub use trace::{BoundaryTraceSpec, Crossing, DEFAULT_TOLERANCE, find_crossing, trace_boundary};

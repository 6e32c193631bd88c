use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gravent_sweeps::{Mode, Preset, Var};

#[derive(Debug, Parser)]
#[command(name = "gravent", version, about = "Gravity-mediated entanglement of two mechanical oscillators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Negativity of one parameter point.
    Point(PointArgs),
    /// Bound report and negativity of one parameter point.
    Bounds(PointArgs),
    /// Grid sweep over one or two axes.
    Sweep(SweepArgs),
    /// Boundary trace by bisection along a second coordinate.
    Trace(TraceArgs),
    /// Run a figure preset.
    Figure(FigureArgs),
    /// Convert laboratory parameters to dimensionless coordinates.
    Physical(PhysicalArgs),
}

/// Parameters shared by every point-based command.
#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    /// Coupling angle θ = g_G t_G in units of 2π.
    #[arg(long, value_name = "X")]
    pub theta_over_2pi: Option<f64>,
    /// Dimensionless damping γ_m t_G.
    #[arg(long, value_name = "X")]
    pub damping: Option<f64>,
    /// Bath occupation N_th.
    #[arg(long, value_name = "X")]
    pub nth: Option<f64>,
    /// Thermal coordinate γ_m t_G N_th in units of 2π.
    #[arg(long, value_name = "X")]
    pub thermal_over_2pi: Option<f64>,
    /// g_G / (2 γ_m N_th).
    #[arg(long, value_name = "X")]
    pub ratio: Option<f64>,
    /// Detection efficiency on both modes.
    #[arg(long, value_name = "X")]
    pub eta: Option<f64>,
    /// Squeezing parameter of the input pair.
    #[arg(long, value_name = "X")]
    pub zeta: Option<f64>,
    /// Photon number of a Fock input |n, 0⟩.
    #[arg(long, value_name = "N")]
    pub fock_n: Option<usize>,
    /// Fock truncation, e.g. 12x12.
    #[arg(long, value_name = "AxB", value_parser = parse_dims)]
    pub dims: Option<(usize, usize)>,
    /// Output CSV path.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// key = value file supplying defaults for any flag.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    /// Evaluation model; defaults to fock-thermal when --fock-n is set.
    #[arg(long, value_parser = parse_mode)]
    pub mode: Option<Mode>,
    #[command(flatten)]
    pub params: Params,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_parser = parse_mode, default_value = "gaussian-closed-form")]
    pub mode: Mode,
    /// `var:lin|log:min:max:count` or `var:list:v1,v2,...`; one or two.
    #[arg(long, value_name = "SPEC", required = true)]
    pub axis: Vec<String>,
    #[command(flatten)]
    pub params: Params,
}

#[derive(Debug, Clone, Args)]
pub struct TraceArgs {
    #[arg(long, value_parser = parse_mode, default_value = "gaussian-closed-form")]
    pub mode: Mode,
    /// Scanned axis, same syntax as `sweep --axis`.
    #[arg(long, value_name = "SPEC")]
    pub scan: String,
    /// Coordinate bisected at each scan value.
    #[arg(long, value_parser = parse_var)]
    pub bisect: Var,
    /// Bisection bracket `lo:hi`.
    #[arg(long, value_name = "LO:HI")]
    pub bracket: String,
    /// Bisect linearly instead of geometrically.
    #[arg(long)]
    pub linear: bool,
    /// negativity, lossy-margin or separability-margin.
    #[arg(long, default_value = "negativity")]
    pub target: String,
    /// Relative tolerance of the crossing.
    #[arg(long, default_value_t = gravent_sweeps::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[command(flatten)]
    pub params: Params,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    #[arg(value_parser = parse_preset)]
    pub preset: Preset,
    /// Points per range axis.
    #[arg(long, default_value_t = 41)]
    pub count: usize,
    /// Dimensionless damping γ_m t_G used to split thermal coordinates.
    #[arg(long, value_name = "X")]
    pub damping: Option<f64>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PhysicalArgs {
    /// Mass over cubed separation, g/cm³.
    #[arg(long, default_value_t = 20.0)]
    pub density: f64,
    /// Mechanical frequency ω_m/2π, Hz.
    #[arg(long, default_value_t = 10e-3)]
    pub omega_m_over_2pi: f64,
    /// Mechanical linewidth 2γ_m/2π, Hz.
    #[arg(long, default_value_t = 1e-15)]
    pub linewidth: f64,
    /// Bath temperature, K.
    #[arg(long, default_value_t = 1e-3)]
    pub temperature: f64,
    /// Interaction time, s.
    #[arg(long, default_value_t = 1e4)]
    pub t_g: f64,
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse::<Mode>().map_err(|e| e.to_string())
}

fn parse_var(s: &str) -> Result<Var, String> {
    s.parse::<Var>().map_err(|e| e.to_string())
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    s.parse::<Preset>().map_err(|e| e.to_string())
}

pub fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(['x', 'X', ',']).ok_or_else(|| format!("expected AxB, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad dimension {a:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad dimension {b:?}"))?;
    if a == 0 || b == 0 {
        return Err("dimensions must be positive".into());
    }
    Ok((a, b))
}

//! Command-line front end: single points, bound reports, sweeps, boundary
//! traces and figure presets, all writing CSV.

pub mod args;
pub mod config;

use std::ffi::OsString;
use std::f64::consts::TAU;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgMatches, CommandFactory, FromArgMatches};
use gravent_bounds::{BoundsError, PhysicalParams, physical_to_dimensionless};
use gravent_sweeps::{
    Axis, BoundaryTraceSpec, Cell, DEFAULT_DAMPING, Evaluation, Fixed, Mode, Point, Preset, PresetOptions, Spacing,
    SweepError, SweepSpec, Table, Target, Var, emit_csv, evaluate, format_float, run_preset, run_sweep,
    trace_boundary,
};

pub use args::{Cli, Command, Params};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numerical(String),
    #[error("{0}")]
    Io(String),
    /// Rendered clap message with its exit code.
    #[error("{text}")]
    Clap { text: String, code: i32 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) | CliError::Io(_) => 1,
            CliError::Clap { code, .. } => *code,
        }
    }
}

impl From<SweepError> for CliError {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::Spec(m) => CliError::Usage(m),
            e @ SweepError::Io { .. } => CliError::Io(e.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// A parsed invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    /// Every flag of the command with its effective value.
    pub record: String,
}

fn preset_list() -> String {
    let mut s = String::from("Figure presets:\n");
    for p in Preset::ALL {
        s.push_str(&format!("  {:<11} {}\n", p.id(), p.description()));
    }
    s
}

pub fn command() -> clap::Command {
    let list = preset_list();
    Cli::command().after_help(list.clone()).mut_subcommand("figure", |c| c.after_help(list))
}

fn provenance(cmd: &clap::Command, m: &ArgMatches) -> String {
    let Some((name, sm)) = m.subcommand() else {
        return "gravent".into();
    };
    let mut parts = vec![format!("gravent {name}")];
    if let Some(sub) = cmd.find_subcommand(name) {
        for a in sub.get_arguments() {
            let id = a.get_id().as_str();
            if id == "help" || id == "version" {
                continue;
            }
            let key = a.get_long().unwrap_or(id);
            let val = match sm.get_raw(id) {
                Some(vs) => vs.map(|v| v.to_string_lossy().replace(['\n', '\r'], " ")).collect::<Vec<_>>().join(";"),
                None => "unset".into(),
            };
            parts.push(format!("{key}={val}"));
        }
    }
    parts.join(" ")
}

pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let cmd = command();
    let args = config::expand_config(&cmd, argv.into_iter().map(Into::into).collect())?;
    let clap_err = |e: clap::Error| CliError::Clap { text: e.render().to_string(), code: e.exit_code() };
    let matches = cmd.clone().try_get_matches_from(args).map_err(clap_err)?;
    let record = provenance(&cmd, &matches);
    let cli = Cli::from_arg_matches(&matches).map_err(clap_err)?;
    Ok(RunConfig { command: cli.command, record })
}

fn check_finite(name: &str, v: Option<f64>) -> Result<(), CliError> {
    match v {
        Some(x) if !x.is_finite() => Err(CliError::Usage(format!("--{name} must be finite, got {x}"))),
        _ => Ok(()),
    }
}

/// Fixed sweep parameters from the shared flags.
pub fn fixed_from(p: &Params) -> Result<Fixed, CliError> {
    for (k, v) in [
        ("theta-over-2pi", p.theta_over_2pi),
        ("damping", p.damping),
        ("nth", p.nth),
        ("thermal-over-2pi", p.thermal_over_2pi),
        ("ratio", p.ratio),
        ("eta", p.eta),
        ("zeta", p.zeta),
    ] {
        check_finite(k, v)?;
    }
    let noise = [p.nth, p.thermal_over_2pi, p.ratio].iter().filter(|v| v.is_some()).count();
    if noise > 1 {
        return Err(CliError::Usage("--nth, --thermal-over-2pi and --ratio are mutually exclusive".into()));
    }
    let damping = p.damping.unwrap_or(DEFAULT_DAMPING);
    if damping < 0.0 {
        return Err(CliError::Usage(format!("--damping must be nonnegative, got {damping}")));
    }
    if let Some(n) = p.nth {
        if n < 0.0 {
            return Err(CliError::Usage(format!("--nth must be nonnegative, got {n}")));
        }
    }
    if let Some(z) = p.zeta {
        if z < 0.0 {
            return Err(CliError::Usage(format!("--zeta must be nonnegative, got {z}")));
        }
    }
    let d = Fixed::default();
    Ok(Fixed {
        theta_over_2pi: p.theta_over_2pi,
        thermal_over_2pi: p.thermal_over_2pi.or(p.nth.map(|n| damping * n / TAU)),
        ratio: p.ratio,
        damping,
        eta: p.eta.unwrap_or(d.eta),
        zeta: p.zeta.unwrap_or(d.zeta),
        n: p.fock_n.unwrap_or(d.n),
        dims: p.dims,
    })
}

/// Parses `var:lin:min:max:count`, `var:log:min:max:count` or `var:list:v1,v2,…`.
pub fn parse_axis(s: &str) -> Result<Axis, CliError> {
    let bad = || CliError::Usage(format!("bad axis {s:?}; expected var:lin|log:min:max:count or var:list:v1,v2"));
    let mut it = s.splitn(3, ':');
    let var: Var = it.next().ok_or_else(bad)?.trim().parse().map_err(|e: SweepError| CliError::Usage(e.to_string()))?;
    let kind = it.next().ok_or_else(bad)?.trim();
    let rest = it.next().ok_or_else(bad)?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| bad());
    let axis = match kind {
        "list" => Axis::list(var, &rest.split(',').map(num).collect::<Result<Vec<_>, _>>()?),
        "lin" | "log" => {
            let f: Vec<&str> = rest.split(':').collect();
            if f.len() != 3 {
                return Err(bad());
            }
            let count = f[2].trim().parse::<usize>().map_err(|_| bad())?;
            let spacing = if kind == "log" { Spacing::Log } else { Spacing::Linear };
            Axis::range(var, num(f[0])?, num(f[1])?, count, spacing)
        }
        _ => return Err(bad()),
    };
    axis.validate()?;
    Ok(axis)
}

fn parse_bracket(s: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Usage(format!("bad bracket {s:?}; expected lo:hi"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn parse_target(s: &str) -> Result<Target, CliError> {
    match s {
        "negativity" => Ok(Target::NegativityZero),
        "lossy-margin" => Ok(Target::LossyMargin),
        "separability-margin" => Ok(Target::SeparabilityMargin),
        _ => Err(CliError::Usage(format!(
            "unknown target {s:?}; expected negativity, lossy-margin or separability-margin"
        ))),
    }
}

fn require_out(out: &Option<PathBuf>, what: &str) -> Result<PathBuf, CliError> {
    out.clone().ok_or_else(|| CliError::Usage(format!("{what} needs --out <PATH>")))
}

fn write_table(t: &Table, path: &Path, record: &str) -> Result<(), CliError> {
    emit_csv(t, path, Some(record)).map_err(CliError::from)
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io(format!("cannot write output: {e}"))
}

fn evaluated(mode: Mode, fixed: &Fixed) -> Result<(Point, Evaluation), CliError> {
    let p = fixed.resolve(&[])?;
    let ev = evaluate(mode, &p, fixed.dims);
    if ev.negativity.is_nan() {
        return Err(CliError::Numerical(format!("evaluation failed: {}", ev.flag)));
    }
    Ok((p, ev))
}

fn verdict(ev: &Evaluation) -> &'static str {
    if ev.negativity > 0.0 { "entangled" } else { "separable" }
}

fn point_table(p: &Point, mode: Mode, ev: &Evaluation) -> Table {
    let mut t = Table::new(
        ["mode", "theta_over_2pi", "thermal_over_2pi", "damping", "n_th", "eta", "zeta", "n", "negativity", "nu_minus", "flag"]
            .map(String::from)
            .to_vec(),
    );
    t.rows.push(vec![
        Cell::Text(mode.name().into()),
        Cell::Num(p.theta / TAU),
        Cell::Num(p.thermal() / TAU),
        Cell::Num(p.damping),
        Cell::Num(p.n_th),
        Cell::Num(p.eta),
        Cell::Num(p.zeta),
        Cell::Num(p.n as f64),
        Cell::Num(ev.negativity),
        Cell::Num(ev.nu_minus),
        Cell::Text(ev.flag.clone()),
    ]);
    t
}

fn print_point(out: &mut dyn Write, mode: Mode, p: &Point, ev: &Evaluation) -> std::io::Result<()> {
    writeln!(out, "mode              {}", mode.name())?;
    writeln!(out, "theta_over_2pi    {}", format_float(p.theta / TAU))?;
    writeln!(out, "thermal_over_2pi  {}", format_float(p.thermal() / TAU))?;
    writeln!(out, "damping           {}", format_float(p.damping))?;
    writeln!(out, "n_th              {}", format_float(p.n_th))?;
    writeln!(out, "eta               {}", format_float(p.eta))?;
    match mode {
        Mode::FockPure | Mode::FockThermal => writeln!(out, "fock_n            {}", p.n)?,
        _ => writeln!(out, "zeta              {}", format_float(p.zeta))?,
    }
    writeln!(out, "negativity        {}", format_float(ev.negativity))?;
    let label = match mode {
        Mode::FockPure | Mode::FockThermal => "min_pt_eigenvalue",
        _ => "nu_minus         ",
    };
    writeln!(out, "{label} {}", format_float(ev.nu_minus))?;
    writeln!(out, "verdict           {}", verdict(ev))?;
    writeln!(out, "flag              {}", ev.flag)
}

fn cmd_point(a: &args::PointArgs, record: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let fixed = fixed_from(&a.params)?;
    let mode = a.mode.unwrap_or(if a.params.fock_n.is_some() { Mode::FockThermal } else { Mode::GaussianClosedForm });
    if mode == Mode::Bounds {
        return Err(CliError::Usage("use the bounds command for bound reports".into()));
    }
    let (p, ev) = evaluated(mode, &fixed)?;
    print_point(out, mode, &p, &ev).map_err(io)?;
    if let Some(path) = &a.params.out {
        write_table(&point_table(&p, mode, &ev), path, record)?;
        writeln!(out, "wrote {}", path.display()).map_err(io)?;
    }
    Ok(())
}

fn cmd_bounds(a: &args::PointArgs, record: &str, out: &mut dyn Write) -> Result<(), CliError> {
    if a.mode.is_some_and(|m| m != Mode::Bounds) {
        return Err(CliError::Usage("bounds evaluates the Gaussian closed form; --mode does not apply".into()));
    }
    if a.params.fock_n.is_some() {
        return Err(CliError::Usage("bounds takes a squeezed-pair input; --fock-n does not apply".into()));
    }
    let fixed = fixed_from(&a.params)?;
    let (p, ev) = evaluated(Mode::Bounds, &fixed)?;
    let r = ev.report.clone().ok_or_else(|| CliError::Numerical("bound report unavailable".into()))?;
    print_point(out, Mode::Bounds, &p, &ev).map_err(io)?;
    let yes = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "universal_margin  {}", format_float(r.universal_margin)).map_err(io)?;
    writeln!(out, "sep_preserved     {} (margin {}, converse {})", yes(r.separability_preserved),
        format_float(r.separability_margin), if r.converse_proven { "proven" } else { "not proven" }).map_err(io)?;
    writeln!(out, "ea                {}", yes(r.ea)).map_err(io)?;
    writeln!(out, "eb                {}", yes(r.eb)).map_err(io)?;
    writeln!(out, "lossy_margin      {}", format_float(r.lossy_margin)).map_err(io)?;
    if let Some(ok) = r.finite_squeezing_ok {
        writeln!(out, "finite_squeezing  {}", yes(ok)).map_err(io)?;
    }
    if let Some(path) = &a.params.out {
        let mut header: Vec<String> = gravent_bounds::CSV_HEADER.split(',').map(String::from).collect();
        header.extend(["zeta", "negativity", "nu_minus", "finite_squeezing_ok", "separability_margin"].map(String::from));
        let mut t = Table::new(header);
        t.rows.push(vec![
            Cell::Num(r.theta),
            Cell::Num(r.damping),
            Cell::Num(r.n_th),
            Cell::Num(r.eta),
            Cell::Num(r.universal_margin),
            Cell::Bool(r.separability_preserved),
            Cell::Bool(r.ea),
            Cell::Bool(r.eb),
            Cell::Num(r.lossy_margin),
            Cell::Num(p.zeta),
            Cell::Num(ev.negativity),
            Cell::Num(ev.nu_minus),
            r.finite_squeezing_ok.map_or(Cell::Text(String::new()), Cell::Bool),
            Cell::Num(r.separability_margin),
        ]);
        write_table(&t, path, record)?;
        writeln!(out, "wrote {}", path.display()).map_err(io)?;
    }
    Ok(())
}

fn summarize(out: &mut dyn Write, t: &Table, path: &Path) -> Result<(), CliError> {
    let failed = match t.column("flag") {
        Some(_) => t.texts("flag").iter().filter(|f| !matches!(f.as_str(), "ok" | "near-threshold")).count(),
        None => 0,
    };
    writeln!(out, "{} rows x {} columns -> {}", t.rows.len(), t.header.len(), path.display()).map_err(io)?;
    if failed > 0 {
        writeln!(out, "{failed} rows carry a failure flag").map_err(io)?;
    }
    Ok(())
}

fn cmd_sweep(a: &args::SweepArgs, record: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let path = require_out(&a.params.out, "sweep")?;
    let axes = a.axis.iter().map(|s| parse_axis(s)).collect::<Result<Vec<_>, _>>()?;
    let spec = SweepSpec { mode: a.mode, fixed: fixed_from(&a.params)?, axes };
    spec.validate()?;
    let t = run_sweep(&spec)?;
    write_table(&t, &path, record)?;
    summarize(out, &t, &path)
}

fn cmd_trace(a: &args::TraceArgs, record: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let path = require_out(&a.params.out, "trace")?;
    let spec = BoundaryTraceSpec {
        mode: a.mode,
        fixed: fixed_from(&a.params)?,
        scan: parse_axis(&a.scan)?,
        bisect: a.bisect,
        bracket: parse_bracket(&a.bracket)?,
        log: !a.linear,
        target: parse_target(&a.target)?,
        tolerance: a.tolerance,
    };
    spec.validate()?;
    let t = trace_boundary(&spec)?;
    write_table(&t, &path, record)?;
    summarize(out, &t, &path)
}

fn cmd_figure(a: &args::FigureArgs, record: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let path = require_out(&a.out, "figure")?;
    check_finite("damping", a.damping)?;
    let damping = a.damping.unwrap_or(DEFAULT_DAMPING);
    if !(damping > 0.0) {
        return Err(CliError::Usage(format!("--damping must be positive, got {damping}")));
    }
    if a.count < 2 {
        return Err(CliError::Usage(format!("--count must be at least 2, got {}", a.count)));
    }
    let t = run_preset(a.preset, &PresetOptions { damping, count: a.count })?;
    write_table(&t, &path, record)?;
    writeln!(out, "{}", a.preset.description()).map_err(io)?;
    summarize(out, &t, &path)
}

fn cmd_physical(a: &args::PhysicalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let pp = PhysicalParams {
        mass_density: a.density,
        omega_m: TAU * a.omega_m_over_2pi,
        gamma_m: 0.5 * TAU * a.linewidth,
        temperature: a.temperature,
        t_g: a.t_g,
    };
    let d = physical_to_dimensionless(&pp)?;
    writeln!(out, "g_G               {} rad/s", format_float(d.g_g)).map_err(io)?;
    writeln!(out, "n_th              {}", format_float(d.n_th)).map_err(io)?;
    writeln!(out, "Q_m               {}", format_float(d.q_m)).map_err(io)?;
    writeln!(out, "damping           {}", format_float(d.damping)).map_err(io)?;
    writeln!(out, "theta_over_2pi    {}", format_float(d.theta_over_2pi())).map_err(io)?;
    writeln!(out, "thermal_over_2pi  {}", format_float(d.damping * d.n_th / TAU)).map_err(io)?;
    writeln!(out, "ratio             {}", format_float(d.ratio())).map_err(io)?;
    Ok(())
}

pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    match &cfg.command {
        Command::Point(a) => cmd_point(a, &cfg.record, out),
        Command::Bounds(a) => cmd_bounds(a, &cfg.record, out),
        Command::Sweep(a) => cmd_sweep(a, &cfg.record, out),
        Command::Trace(a) => cmd_trace(a, &cfg.record, out),
        Command::Figure(a) => cmd_figure(a, &cfg.record, out),
        Command::Physical(a) => cmd_physical(a, out),
    }
}

/// Parses and runs `argv`, returning the exit code.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let result = parse_args(argv).and_then(|cfg| run(&cfg, out));
    match result {
        Ok(()) => 0,
        Err(CliError::Clap { text, code }) => {
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

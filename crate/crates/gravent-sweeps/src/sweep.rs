use rayon::prelude::*;

use gravent_bounds::CSV_HEADER;

use crate::error::Result;
use crate::eval::evaluate;
use crate::spec::{SweepSpec, Var};
use crate::table::{Cell, Table};

/// Evaluates every grid point, row-major over the axes, in parallel.
pub fn run_sweep(spec: &SweepSpec) -> Result<Table> {
    spec.validate()?;
    let grid = grid(spec);
    let rows: Vec<Vec<Cell>> = grid.par_iter().map(|coords| row(spec, coords)).collect();
    let mut header: Vec<String> = spec.axes.iter().map(|a| a.var.name().to_string()).collect();
    header.extend(["negativity", "nu_minus", "flag"].map(String::from));
    if spec.mode == crate::spec::Mode::Bounds {
        header.extend(CSV_HEADER.split(',').map(String::from));
        header.extend(["finite_squeezing_ok", "separability_margin"].map(String::from));
    }
    Ok(Table { header, rows })
}

fn grid(spec: &SweepSpec) -> Vec<Vec<(Var, f64)>> {
    let mut out: Vec<Vec<(Var, f64)>> = vec![Vec::new()];
    for axis in &spec.axes {
        let pts = axis.points();
        out = out
            .into_iter()
            .flat_map(|prefix| {
                pts.iter().map(move |&x| {
                    let mut c = prefix.clone();
                    c.push((axis.var, x));
                    c
                })
            })
            .collect();
    }
    out
}

fn row(spec: &SweepSpec, coords: &[(Var, f64)]) -> Vec<Cell> {
    let mut cells: Vec<Cell> = coords.iter().map(|&(_, x)| Cell::Num(x)).collect();
    let bounds = spec.mode == crate::spec::Mode::Bounds;
    match spec.fixed.resolve(coords) {
        Ok(p) => {
            let e = evaluate(spec.mode, &p, spec.fixed.dims);
            cells.push(Cell::Num(e.negativity));
            cells.push(Cell::Num(e.nu_minus));
            cells.push(Cell::Text(e.flag));
            if bounds {
                match e.report {
                    Some(r) => {
                        cells.extend(
                            [r.theta, r.damping, r.n_th, r.eta, r.universal_margin].map(Cell::Num),
                        );
                        cells.extend([r.separability_preserved, r.ea, r.eb].map(Cell::Bool));
                        cells.push(Cell::Num(r.lossy_margin));
                        cells.push(r.finite_squeezing_ok.map_or(Cell::Text(String::new()), Cell::Bool));
                        cells.push(Cell::Num(r.separability_margin));
                    }
                    None => pad(&mut cells),
                }
            }
        }
        Err(err) => {
            cells.push(Cell::Num(f64::NAN));
            cells.push(Cell::Num(f64::NAN));
            cells.push(Cell::Text(err.to_string()));
            if bounds {
                pad(&mut cells);
            }
        }
    }
    cells
}

fn pad(cells: &mut Vec<Cell>) {
    cells.extend(std::iter::repeat_n(Cell::Num(f64::NAN), 5));
    cells.extend(std::iter::repeat_n(Cell::Text(String::new()), 3));
    cells.push(Cell::Num(f64::NAN));
    cells.push(Cell::Text(String::new()));
    cells.push(Cell::Num(f64::NAN));
}

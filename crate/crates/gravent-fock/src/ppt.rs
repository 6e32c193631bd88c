use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::density::FockDensityMatrix;
use crate::error::{FockError, Result};

/// Which mode the partial transpose acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtMode {
    A,
    B,
}

/// Spectrum of the partial transpose.
///
/// `ρ^{T_B}` maps `(m, ℓ′),(ℓ, m′)` to `ρ_{(m,m′),(ℓ,ℓ′)}`. It splits into
/// blocks of fixed `δ = m − ℓ′`; each block is eigensolved separately.
pub fn partial_transpose_spectrum(rho: &FockDensityMatrix, mode: PtMode) -> Result<Vec<f64>> {
    let err = rho.hermiticity_error();
    if err > crate::density::HERMITIAN_TOL {
        return Err(FockError::Validation(format!("density matrix is not Hermitian (error {err:e})")));
    }
    let (da, db) = (rho.dim_a() as isize, rho.dim_b() as isize);
    let mut out = Vec::with_capacity((da * db) as usize);
    for delta in -(db - 1)..da {
        let lo = delta.max(0);
        let hi = (da - 1).min(db - 1 + delta);
        if hi < lo {
            continue;
        }
        let len = (hi - lo + 1) as usize;
        let block = DMatrix::from_fn(len, len, |i, j| {
            let r = (lo + i as isize) as usize;
            let c = (lo + j as isize) as usize;
            let d = delta as usize;
            let z = match mode {
                // rows (r, r − δ), cols (c, c − δ)
                PtMode::B => rho.element(r, c.wrapping_sub(d), c, r.wrapping_sub(d)),
                PtMode::A => rho.element(c, r.wrapping_sub(d), r, c.wrapping_sub(d)),
            };
            let w = match mode {
                PtMode::B => rho.element(c, r.wrapping_sub(d), r, c.wrapping_sub(d)),
                PtMode::A => rho.element(r, c.wrapping_sub(d), c, r.wrapping_sub(d)),
            };
            0.5 * (z + w.conj())
        });
        out.extend(SymmetricEigen::new(block).eigenvalues.iter().copied());
    }
    Ok(out)
}

/// `Σ |λ|` over the negative eigenvalues of `ρ^{T_B}`.
pub fn ppt_negativity(rho: &FockDensityMatrix) -> Result<f64> {
    ppt_negativity_on(rho, PtMode::B)
}

pub fn ppt_negativity_on(rho: &FockDensityMatrix, mode: PtMode) -> Result<f64> {
    Ok(partial_transpose_spectrum(rho, mode)?.into_iter().filter(|&x| x < 0.0).map(|x| -x).sum())
}

/// Smallest eigenvalue of `ρ^{T_B}`.
pub fn min_pt_eigenvalue(rho: &FockDensityMatrix) -> Result<f64> {
    Ok(partial_transpose_spectrum(rho, PtMode::B)?.into_iter().fold(f64::INFINITY, f64::min))
}

/// `‖ρ^{T_B}‖₁`.
pub fn pt_trace_norm(rho: &FockDensityMatrix) -> Result<f64> {
    Ok(partial_transpose_spectrum(rho, PtMode::B)?.into_iter().map(f64::abs).sum())
}

/// Dense `ρ^{T_B}` indexed `m·dim_b + m′`, for cross-checks.
pub fn partial_transpose_dense(rho: &FockDensityMatrix) -> DMatrix<Complex64> {
    let db = rho.dim_b();
    let d = rho.dim_a() * db;
    DMatrix::from_fn(d, d, |r, c| rho.element(r / db, c % db, c / db, r % db))
}

use nalgebra::{Matrix4, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{GaussianError, Result};
use crate::real::Real;

/// Symmetry tolerance, relative to the largest entry when that exceeds one.
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Allowed negativity of the smallest eigenvalue of `V + iΩ`.
pub const PHYSICAL_TOL: f64 = 1e-9;

/// 4×4 covariance matrix in (X_A, Y_A, X_B, Y_B) ordering, vacuum = identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovMat4<T: Real = f64> {
    m: [[T; 4]; 4],
}

impl<T: Real> CovMat4<T> {
    /// Checks symmetry before accepting the entries.
    pub fn new(m: [[T; 4]; 4]) -> Result<Self> {
        let v = CovMat4 { m };
        let tol = SYMMETRY_TOL * v.max_abs().max(1.0);
        for i in 0..4 {
            for j in 0..i {
                let d = (m[i][j] - m[j][i]).as_f64().abs();
                if !(d <= tol) {
                    return Err(GaussianError::Domain(format!(
                        "covariance matrix not symmetric: |V[{i}][{j}] - V[{j}][{i}]| = {d:e}"
                    )));
                }
            }
        }
        Ok(v)
    }

    /// Symmetrises by averaging with the transpose.
    pub fn symmetrized(m: [[T; 4]; 4]) -> Self {
        let mut out = m;
        for i in 0..4 {
            for j in 0..i {
                let a = (m[i][j] + m[j][i]) * T::half();
                out[i][j] = a;
                out[j][i] = a;
            }
        }
        CovMat4 { m: out }
    }

    pub fn identity() -> Self {
        Self::diagonal([T::one(); 4])
    }

    pub fn diagonal(d: [T; 4]) -> Self {
        let mut m = [[T::zero(); 4]; 4];
        for i in 0..4 {
            m[i][i] = d[i];
        }
        CovMat4 { m }
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.m[i][j]
    }

    pub fn entries(&self) -> &[[T; 4]; 4] {
        &self.m
    }

    pub fn convert<U: Real>(&self) -> CovMat4<U> {
        let mut m = [[U::zero(); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = U::of(self.m[i][j].as_f64());
            }
        }
        CovMat4 { m }
    }

    pub fn to_f64(&self) -> CovMat4<f64> {
        self.convert()
    }

    pub fn max_abs(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|x| x.as_f64().abs())
            .fold(0.0, f64::max)
    }

    /// Determinant by partial-pivot elimination. Cofactor expansion loses
    /// every digit on strongly squeezed states where the pivots stay O(1).
    pub fn det(&self) -> T {
        let mut a = self.m;
        let mut det = T::one();
        for k in 0..4 {
            let mut p = k;
            for i in k + 1..4 {
                if a[i][k].abs() > a[p][k].abs() {
                    p = i;
                }
            }
            if a[p][k] == T::zero() {
                return T::zero();
            }
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            det = det * a[k][k];
            for i in k + 1..4 {
                let f = a[i][k] / a[k][k];
                for j in k + 1..4 {
                    a[i][j] = a[i][j] - f * a[k][j];
                }
            }
        }
        det
    }

    /// `(det V_A, det V_B, det V_AB)` of the 2×2 blocks.
    pub fn block_dets(&self) -> (T, T, T) {
        let m = &self.m;
        let da = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let db = m[2][2] * m[3][3] - m[2][3] * m[3][2];
        let dc = m[0][2] * m[1][3] - m[0][3] * m[1][2];
        (da, db, dc)
    }

    /// `P V P` with `P = diag(1, 1, 1, -1)`: partial transpose on mode B.
    pub fn partial_transpose(&self) -> Self {
        let mut m = self.m;
        for i in 0..4 {
            if i != 3 {
                m[i][3] = -m[i][3];
                m[3][i] = -m[3][i];
            }
        }
        CovMat4 { m }
    }

    /// Smallest eigenvalue of the Hermitian matrix `V + Σ`, `Σ = (−σ_y) ⊕ (−σ_y)`.
    pub fn physical_min_eigenvalue(&self) -> f64 {
        let v = self.to_f64();
        let mut h = Matrix4::<Complex64>::zeros();
        for i in 0..4 {
            for j in 0..4 {
                h[(i, j)] = Complex64::new(v.m[i][j], 0.0);
            }
        }
        for b in [0, 2] {
            h[(b, b + 1)] += Complex64::new(0.0, 1.0);
            h[(b + 1, b)] += Complex64::new(0.0, -1.0);
        }
        SymmetricEigen::new(h).eigenvalues.min()
    }

    /// Uncertainty principle `V + Σ ⪰ 0` within [`PHYSICAL_TOL`], scaled by
    /// the largest entry for strongly squeezed states.
    pub fn is_physical(&self) -> bool {
        self.physical_min_eigenvalue() >= -PHYSICAL_TOL * self.max_abs().max(1.0)
    }

    pub(crate) fn from_raw(m: [[T; 4]; 4]) -> Self {
        CovMat4 { m }
    }
}

/// Both modes squeezed along the same axis: diag(e^{2ζ}, e^{−2ζ}, e^{2ζ}, e^{−2ζ}).
pub fn input_squeezed_pair<T: Real>(zeta: f64) -> CovMat4<T> {
    let (p, m) = T::exp_pm(2.0 * zeta);
    CovMat4::diagonal([p, m, p, m])
}

/// Two-mode squeezed vacuum: cosh 2r on the diagonal blocks, sinh 2r·σ_z off-diagonal.
pub fn input_tmsv<T: Real>(r: f64) -> CovMat4<T> {
    let (p, m) = T::exp_pm(2.0 * r);
    let c = (p + m) * T::half();
    let s = (p - m) * T::half();
    let z = T::zero();
    CovMat4::from_raw([[c, z, s, z], [z, c, z, -s], [s, z, c, z], [z, -s, z, c]])
}

/// Covariance of a single-mode squeezed-rotated thermal state placed on
/// mode A and B independently: `ν R(φ) diag(e^{2s}, e^{−2s}) R(φ)ᵀ`.
pub fn product_state(nu_a: f64, s_a: f64, phi_a: f64, nu_b: f64, s_b: f64, phi_b: f64) -> CovMat4<f64> {
    let ba = single_mode(nu_a, s_a, phi_a);
    let bb = single_mode(nu_b, s_b, phi_b);
    let mut m = [[0.0; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = ba[i][j];
            m[i + 2][j + 2] = bb[i][j];
        }
    }
    CovMat4::from_raw(m)
}

fn single_mode(nu: f64, s: f64, phi: f64) -> [[f64; 2]; 2] {
    let (sn, c) = phi.sin_cos();
    let (p, q) = ((2.0 * s).exp(), (-2.0 * s).exp());
    [
        [nu * (c * c * p + sn * sn * q), nu * c * sn * (p - q)],
        [nu * c * sn * (p - q), nu * (sn * sn * p + c * c * q)],
    ]
}

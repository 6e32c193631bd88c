#![allow(dead_code)]

use gravent_gaussian::CovMat4;
use nalgebra::{Matrix4, SymmetricEigen};
use num_complex::Complex64;

pub type M4 = Matrix4<f64>;

pub fn to_na(v: &CovMat4) -> M4 {
    M4::from_fn(|i, j| v.get(i, j))
}

pub fn from_na(m: &M4) -> CovMat4 {
    let mut a = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            a[i][j] = 0.5 * (m[(i, j)] + m[(j, i)]);
        }
    }
    CovMat4::new(a).unwrap()
}

pub fn rotation(pa: f64, pb: f64) -> M4 {
    let (sa, ca) = pa.sin_cos();
    let (sb, cb) = pb.sin_cos();
    let mut m = M4::zeros();
    m[(0, 0)] = ca;
    m[(0, 1)] = -sa;
    m[(1, 0)] = sa;
    m[(1, 1)] = ca;
    m[(2, 2)] = cb;
    m[(2, 3)] = -sb;
    m[(3, 2)] = sb;
    m[(3, 3)] = cb;
    m
}

pub fn local_squeeze(ra: f64, rb: f64) -> M4 {
    M4::from_diagonal(&nalgebra::Vector4::new(ra.exp(), (-ra).exp(), rb.exp(), (-rb).exp()))
}

pub fn beam_splitter(t: f64) -> M4 {
    let (s, c) = t.sin_cos();
    let mut m = M4::zeros();
    for i in 0..2 {
        m[(i, i)] = c;
        m[(i + 2, i + 2)] = c;
        m[(i, i + 2)] = s;
        m[(i + 2, i)] = -s;
    }
    m
}

pub fn two_mode_squeeze(r: f64) -> M4 {
    let (c, s) = (r.cosh(), r.sinh());
    let mut m = M4::zeros();
    for i in 0..4 {
        m[(i, i)] = c;
    }
    m[(0, 2)] = s;
    m[(2, 0)] = s;
    m[(1, 3)] = -s;
    m[(3, 1)] = -s;
    m
}

/// Random physical state `S diag(ν_a, ν_a, ν_b, ν_b) Sᵀ` from a product of
/// symplectic building blocks; parameters come from the caller.
pub fn physical_state(p: &[f64; 10]) -> CovMat4 {
    let d = M4::from_diagonal(&nalgebra::Vector4::new(p[0], p[0], p[1], p[1]));
    let s = rotation(p[2], p[3]) * local_squeeze(p[4], p[5]) * beam_splitter(p[6]) * two_mode_squeeze(p[7])
        * rotation(p[8], p[9]);
    from_na(&(s * d * s.transpose()))
}

/// ν_- from the Hermitian matrix `S (iΩ) S`, `S = (PVP)^{1/2}`, whose spectrum
/// is `±ν_k`.
pub fn brute_force_nu_minus(v: &CovMat4) -> f64 {
    let pv = to_na(&v.partial_transpose());
    let eig = SymmetricEigen::new(pv);
    let sqrt_d = eig.eigenvalues.map(|x| x.max(0.0).sqrt());
    let s = &eig.eigenvectors * M4::from_diagonal(&sqrt_d) * eig.eigenvectors.transpose();
    let mut omega = Matrix4::<Complex64>::zeros();
    for b in [0, 2] {
        omega[(b, b + 1)] = Complex64::new(0.0, 1.0);
        omega[(b + 1, b)] = Complex64::new(0.0, -1.0);
    }
    let sc = s.map(|x| Complex64::new(x, 0.0));
    let h = &sc * omega * &sc;
    let ev = SymmetricEigen::new(h).eigenvalues;
    ev.iter().map(|x| x.abs()).fold(f64::INFINITY, f64::min)
}

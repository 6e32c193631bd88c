use crate::covariance::CovMat4;
use crate::error::{GaussianError, Result};
use crate::params::{ChannelParams, check_unit};
use crate::real::Real;

/// Amplitudes of a rectangular red-detuned swap pulse of strength G·t_P:
/// `(e^{−G t_P}, √(1 − e^{−2G t_P}))`.
pub fn swap_coefficients(gt_p: f64) -> Result<(f64, f64)> {
    if !(gt_p >= 0.0) {
        return Err(GaussianError::Domain(format!("G*t_P must be >= 0, got {gt_p}")));
    }
    let t = (-gt_p).exp();
    let s = (-(-2.0 * gt_p).exp_m1()).sqrt();
    Ok((t, s))
}

/// Transfer matrix of the gravitational stage plus its additive noise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GravityChannel<T: Real = f64> {
    pub m: [[T; 4]; 4],
    pub v_th: CovMat4<T>,
}

/// The channel for `p` in `f64`.
pub fn gravity_channel(p: &ChannelParams) -> Result<GravityChannel> {
    gravity_channel_in(p)
}

/// The channel for `p` in any [`Real`] scalar.
pub fn gravity_channel_in<T: Real>(p: &ChannelParams) -> Result<GravityChannel<T>> {
    p.validate()?;
    let (e, _) = T::exp_pm(-p.damping);
    let (c, s) = T::cos_sin(p.theta);
    let dc = -(e * c);
    let es = e * s;
    let z = T::zero();
    let m = [
        [dc, z, z, es],
        [z, dc, -es, z],
        [z, es, dc, z],
        [-es, z, z, dc],
    ];
    let noise = 2.0 * (-(-2.0 * p.damping).exp_m1()) * p.n_th;
    let v_th = CovMat4::diagonal([T::of(noise); 4]);
    Ok(GravityChannel { m, v_th })
}

/// `M V Mᵀ + V_th`.
pub fn evolve<T: Real>(v_in: &CovMat4<T>, ch: &GravityChannel<T>) -> CovMat4<T> {
    let v = v_in.entries();
    let m = &ch.m;
    let mut mv = [[T::zero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = T::zero();
            for k in 0..4 {
                acc = acc + m[i][k] * v[k][j];
            }
            mv[i][j] = acc;
        }
    }
    let mut out = [[T::zero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = T::zero();
            for k in 0..4 {
                acc = acc + mv[i][k] * m[j][k];
            }
            out[i][j] = acc + ch.v_th.get(i, j);
        }
    }
    CovMat4::symmetrized(out)
}

/// Local beam-splitter loss on both output modes with thermal environments.
pub fn apply_loss<T: Real>(v: &CovMat4<T>, p: &ChannelParams) -> Result<CovMat4<T>> {
    check_unit("eta_a", p.eta_a)?;
    check_unit("eta_b", p.eta_b)?;
    let ea = T::of(p.eta_a);
    let eb = T::of(p.eta_b);
    let cross = T::of((p.eta_a * p.eta_b).sqrt());
    let na = T::of((1.0 - p.eta_a) * (2.0 * p.nbar_a + 1.0));
    let nb = T::of((1.0 - p.eta_b) * (2.0 * p.nbar_b + 1.0));
    let src = v.entries();
    let mut m = *src;
    for i in 0..4 {
        for j in 0..4 {
            let scale = match (i < 2, j < 2) {
                (true, true) => ea,
                (false, false) => eb,
                _ => cross,
            };
            m[i][j] = src[i][j] * scale;
        }
    }
    for i in 0..2 {
        m[i][i] = m[i][i] + na;
        m[i + 2][i + 2] = m[i + 2][i + 2] + nb;
    }
    Ok(CovMat4::symmetrized(m))
}

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::density::FockDensityMatrix;
use crate::error::{FockError, Result};
use crate::logfact::LogFactorials;
use crate::pure::{FockConfig, unit_phase};

/// Trace-deficit change that stops the doubling of the truncation.
pub const DEFICIT_CHANGE_TOL: f64 = 1e-10;

/// Output state for input `|n, 0⟩` through the channel with thermal noise.
///
/// `dims = None` picks the truncation adaptively.
pub fn thermal_output_density(
    n: usize,
    theta: f64,
    damping: f64,
    n_th: f64,
    dims: Option<(usize, usize)>,
) -> Result<FockDensityMatrix> {
    thermal_output_density_with(n, theta, damping, n_th, dims, &FockConfig::default())
}

pub fn thermal_output_density_with(
    n: usize,
    theta: f64,
    damping: f64,
    n_th: f64,
    dims: Option<(usize, usize)>,
    cfg: &FockConfig,
) -> Result<FockDensityMatrix> {
    let model = ThermalModel::new(n, theta, damping, n_th, cfg)?;
    let (da, db) = match dims {
        Some((0, _)) | Some((_, 0)) => {
            return Err(FockError::Dimension("truncation dimensions must be at least 1".into()));
        }
        Some(d) => d,
        None => {
            let d = model.adaptive_dim(cfg)?;
            (d, d)
        }
    };
    let table = GTable::new(da.max(db), n, model.a);
    let rho = FockDensityMatrix::from_fn(da, db, |m, mp, l, lp| model.element(&table, m, mp, l, lp));
    if !(rho.trace_deficit() <= cfg.trace_tol) {
        let s = model.suggest_dim(da.max(db), cfg.trace_tol);
        return Err(FockError::Truncation {
            deficit: rho.trace_deficit(),
            tolerance: cfg.trace_tol,
            suggested: (s, s),
        });
    }
    Ok(rho)
}

/// Per-mode dimension the adaptive rule starts from.
pub fn initial_dim(n: usize, damping: f64, n_th: f64) -> usize {
    let noise = 2.0 * -(-2.0 * damping).exp_m1() * n_th;
    n + 3 + (8.0 * noise).ceil() as usize
}

struct ThermalModel {
    n: usize,
    damping: f64,
    n_th: f64,
    cos: f64,
    sin: f64,
    /// Mean added thermal occupation `(1 − e^{−2d}) N_th`.
    x: f64,
    a: f64,
    lf: LogFactorials,
}

impl ThermalModel {
    fn new(n: usize, theta: f64, damping: f64, n_th: f64, cfg: &FockConfig) -> Result<Self> {
        if n > cfg.max_n {
            return Err(FockError::Domain(format!("n = {n} exceeds the configured maximum {}", cfg.max_n)));
        }
        if !theta.is_finite() || !(damping >= 0.0) || !damping.is_finite() || !(n_th >= 0.0) || !n_th.is_finite() {
            return Err(FockError::Domain(format!(
                "need finite theta and damping, n_th >= 0 (theta = {theta}, damping = {damping}, n_th = {n_th})"
            )));
        }
        let x = -(-2.0 * damping).exp_m1() * n_th;
        if !x.is_finite() {
            return Err(FockError::Domain("damping * n_th overflows".into()));
        }
        let (sin, cos) = theta.sin_cos();
        Ok(ThermalModel { n, damping, n_th, cos, sin, x, a: 1.0 + x, lf: LogFactorials::new(2 * n + 2) })
    }

    fn element(&self, g: &GTable, m: usize, mp: usize, l: usize, lp: usize) -> Complex64 {
        if m + mp != l + lp {
            return Complex64::new(0.0, 0.0);
        }
        let lf = &self.lf;
        let mut sum = NeumaierC::default();
        for k in 0..=self.n {
            let base = lf.ln_binomial(self.n, k) - lf.ln_factorial(k) - 2.0 * self.damping * k as f64;
            for kp in 0..=k {
                // k'' = k' − ℓ + m, which equals k' + ℓ' − m' on the allowed sector.
                let kpp = kp as isize - l as isize + m as isize;
                if kpp < 0 || kpp as usize > k {
                    continue;
                }
                let kpp = kpp as usize;
                let ga = g.get(m, l, kp);
                let gb = g.get(mp, lp, k - kp);
                if ga == 0.0 || gb == 0.0 {
                    continue;
                }
                let pc = kp + kpp;
                let ps = 2 * k - pc;
                let mag = (base + lf.ln_binomial(k, kp) + lf.ln_binomial(k, kpp)).exp()
                    * self.cos.abs().powi(pc as i32)
                    * self.sin.abs().powi(ps as i32);
                let negative = (kpp % 2 == 1) ^ (self.cos < 0.0 && pc % 2 == 1) ^ (self.sin >= 0.0 && ps % 2 == 1);
                sum.add(unit_phase(ps, negative) * (mag * ga * gb));
            }
        }
        sum.total()
    }

    fn deficit(&self, dim: usize) -> f64 {
        let g = GTable::new(dim, self.n, self.a);
        let mut tr = 0.0;
        for m in 0..dim {
            for mp in 0..dim {
                tr += self.element(&g, m, mp, m, mp).re;
            }
        }
        1.0 - tr
    }

    fn adaptive_dim(&self, cfg: &FockConfig) -> Result<usize> {
        let cap = cfg.max_dim.max(self.n + 1);
        let mut dim = initial_dim(self.n, self.damping, self.n_th).min(cap);
        let mut prev = self.deficit(dim);
        while dim < cap {
            let next = (2 * dim).min(cap);
            let d = self.deficit(next);
            dim = next;
            let change = (prev - d).abs();
            prev = d;
            if change < DEFICIT_CHANGE_TOL {
                break;
            }
        }
        if !(prev <= cfg.trace_tol) {
            let s = self.suggest_dim(dim, cfg.trace_tol);
            return Err(FockError::Truncation { deficit: prev, tolerance: cfg.trace_tol, suggested: (s, s) });
        }
        Ok(dim)
    }

    // Populations of the amplified state fall off like (x/(1+x))^m.
    fn suggest_dim(&self, current: usize, tol: f64) -> usize {
        let ratio = self.x / (1.0 + self.x);
        let tail = if ratio > 0.0 { (tol.ln() / ratio.ln()).ceil() as usize } else { 0 };
        (self.n + 1 + tail).max(2 * current)
    }
}

/// `√(min(m,ℓ)!/max(m,ℓ)!)·G(m, ℓ, q)` for one mode, where `G` is the
/// closed-form Gamma-function integral
/// `Σ_u (−1)^u C(ℓ, m−u) (q+u)!/u! · a^{−(q+u+1)}` (ℓ ≥ m, and the mirrored sum
/// for m > ℓ). Each entry is evaluated in exact rational arithmetic.
struct GTable {
    dim: usize,
    qn: usize,
    data: Vec<f64>,
}

impl GTable {
    fn new(dim: usize, n: usize, a: f64) -> Self {
        let (big_a, e) = dyadic(a);
        let lf = LogFactorials::new(dim);
        let qn = n + 1;
        let mut data = Vec::with_capacity(dim * dim * qn);
        for m in 0..dim {
            for l in 0..dim {
                let ln_pre = 0.5 * (lf.ln_factorial(m.min(l)) - lf.ln_factorial(m.max(l)));
                for q in 0..qn {
                    data.push(exact_g(m, l, q, &big_a, e, ln_pre));
                }
            }
        }
        GTable { dim, qn, data }
    }

    fn get(&self, m: usize, l: usize, q: usize) -> f64 {
        self.data[(m * self.dim + l) * self.qn + q]
    }
}

/// `a = A·2^{−E}` with integer `A` and `E ≥ 0`.
fn dyadic(a: f64) -> (BigUint, u64) {
    debug_assert!(a >= 1.0 && a.is_finite());
    let bits = a.to_bits();
    let raw_exp = ((bits >> 52) & 0x7ff) as i64;
    let mut mant = (bits & ((1u64 << 52) - 1)) | (1u64 << 52);
    let mut exp = raw_exp - 1075;
    while exp < 0 && mant % 2 == 0 {
        mant /= 2;
        exp += 1;
    }
    if exp >= 0 {
        (BigUint::from(mant) << exp as u64, 0)
    } else {
        (BigUint::from(mant), (-exp) as u64)
    }
}

fn exact_g(m: usize, l: usize, q: usize, big_a: &BigUint, e: u64, ln_pre: f64) -> f64 {
    // Σ_{u=0}^{U} c_u a^{−(p+u+1)} with c_u = (−1)^{u+s} C(big, small−u) (p+u)!/u!.
    let (big, small, s, p) = if l >= m { (l, m, 0, q) } else { (m, l, m - l, m - l + q) };
    let u_max = small;
    let mut binom = vec![BigUint::one(); small + 1];
    for j in 0..small {
        binom[j + 1] = &binom[j] * BigUint::from(big - j) / BigUint::from(j + 1);
    }
    let mut rising = (1..=p).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
    let a_int = BigInt::from(big_a.clone());
    let mut t = BigInt::zero();
    for u in 0..=u_max {
        if u > 0 {
            rising = rising * BigUint::from(p + u) / BigUint::from(u);
        }
        let mut c = BigInt::from(&binom[small - u] * &rising);
        if (u + s) % 2 == 1 {
            c = -c;
        }
        t = if u == 0 { c } else { t * &a_int + (c << (e * u as u64)) };
    }
    if t.is_zero() {
        return 0.0;
    }
    let den = big_a.pow((p + u_max + 1) as u32);
    let (mant, exp2) = quotient(&t, &den);
    let k = (ln_pre / std::f64::consts::LN_2).round();
    let r = ln_pre - k * std::f64::consts::LN_2;
    ldexp(mant * r.exp(), exp2 + (e * (p as u64 + 1)) as i64 + k as i64)
}

/// `num/den ≈ mant·2^{exp}` with a 64-bit-accurate mantissa.
fn quotient(num: &BigInt, den: &BigUint) -> (f64, i64) {
    let negative = num.is_negative();
    let nu = num.abs().to_biguint().expect("non-negative");
    let shift = den.bits() as i64 - nu.bits() as i64 + 66;
    let q = if shift >= 0 { (nu << shift as u64) / den } else { nu / (den << (-shift) as u64) };
    let mant = q.to_f64().expect("finite");
    (if negative { -mant } else { mant }, -shift)
}

fn ldexp(mut x: f64, mut e: i64) -> f64 {
    let big = 2f64.powi(1000);
    let small = 2f64.powi(-1000);
    while e > 1000 && x != 0.0 && x.is_finite() {
        x *= big;
        e -= 1000;
    }
    while e < -1000 && x != 0.0 {
        x *= small;
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}

#[derive(Default)]
struct NeumaierC {
    re: (f64, f64),
    im: (f64, f64),
}

impl NeumaierC {
    fn add(&mut self, z: Complex64) {
        neumaier(&mut self.re, z.re);
        neumaier(&mut self.im, z.im);
    }

    fn total(&self) -> Complex64 {
        Complex64::new(self.re.0 + self.re.1, self.im.0 + self.im.1)
    }
}

fn neumaier(acc: &mut (f64, f64), x: f64) {
    let t = acc.0 + x;
    if acc.0.abs() >= x.abs() {
        acc.1 += (acc.0 - t) + x;
    } else {
        acc.1 += (x - t) + acc.0;
    }
    acc.0 = t;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pure::pure_output_density;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn dyadic_decomposition() {
        for a in [1.0, 1.5, 3.0, 1.0 + 1e-12, 1234.5678, 2f64.powi(70)] {
            let (m, e) = dyadic(a);
            let back = m.to_f64().unwrap() / 2f64.powi(e as i32);
            assert_eq!(back, a);
        }
    }

    #[test]
    fn g_matches_direct_sum() {
        let a = 1.37f64;
        let lf = LogFactorials::new(40);
        for &(m, l, q) in &[(0, 0, 0), (2, 5, 3), (5, 2, 1), (7, 7, 4), (0, 9, 2), (9, 0, 0)] {
            let (big_a, e) = dyadic(a);
            let got = exact_g(m, l, q, &big_a, e, 0.0);
            let terms: Vec<f64> = if l >= m {
                (0..=m)
                    .map(|u| {
                        let s = if u % 2 == 0 { 1.0 } else { -1.0 };
                        s * lf.ln_binomial(l, m - u).exp() * (lf.ln_factorial(q + u) - lf.ln_factorial(u)).exp()
                            / a.powi((q + u + 1) as i32)
                    })
                    .collect()
            } else {
                let p = m - l + q;
                (0..=l)
                    .map(|u| {
                        let s = if (u + m - l) % 2 == 0 { 1.0 } else { -1.0 };
                        s * lf.ln_binomial(m, l - u).exp() * (lf.ln_factorial(p + u) - lf.ln_factorial(u)).exp()
                            / a.powi((p + u + 1) as i32)
                    })
                    .collect()
            };
            // The plain sum is only good to round-off on the largest term.
            let direct: f64 = terms.iter().sum();
            let scale: f64 = terms.iter().map(|t| t.abs()).sum();
            assert!((got - direct).abs() <= 1e-13 * scale, "{m} {l} {q}: {got} vs {direct}");
        }
    }

    #[test]
    fn vacuum_populations_thermal() {
        // G(m, m, 0) = x^m/(1+x)^{m+1}.
        let x = 0.5f64;
        let t = GTable::new(6, 0, 1.0 + x);
        for m in 0..6 {
            let want = x.powi(m as i32) / (1.0 + x).powi(m as i32 + 1);
            assert!((t.get(m, m, 0) - want).abs() < 1e-16);
        }
    }

    #[test]
    fn zero_noise_recovers_pure_state() {
        for n in 0..=4 {
            let th = 0.3 + n as f64 * 0.2;
            let rho = thermal_output_density(n, th, 0.0, 0.0, Some((n + 2, n + 2))).unwrap();
            let pure = pure_output_density(n, th, Some((n + 2, n + 2))).unwrap();
            for (m, mp, l, lp, z) in rho.iter() {
                assert!((z - pure.element(m, mp, l, lp)).norm() < 1e-12);
            }
        }
        let rho = thermal_output_density(1, FRAC_PI_4, 0.0, 0.0, None).unwrap();
        assert!((rho.element(1, 0, 1, 0).re - 0.5).abs() < 1e-14);
    }

    #[test]
    fn adaptive_truncation_meets_tolerance() {
        let rho = thermal_output_density(2, 0.4, 0.01, 2.0, None).unwrap();
        assert!(rho.trace_deficit() <= 1e-8);
        assert!(rho.trace_deficit() >= -1e-12);
        assert!(rho.is_hermitian());
    }

    #[test]
    fn too_small_dims_report_suggestion() {
        match thermal_output_density(1, 0.4, 0.1, 5.0, Some((3, 3))) {
            Err(FockError::Truncation { suggested, deficit, .. }) => {
                assert!(deficit > 1e-8);
                assert!(suggested.0 > 3);
            }
            other => panic!("expected truncation error, got {other:?}"),
        }
        assert!(matches!(thermal_output_density(1, 0.4, 0.1, 5.0, Some((0, 3))), Err(FockError::Dimension(_))));
        assert!(matches!(thermal_output_density(11, 0.4, 0.1, 5.0, None), Err(FockError::Domain(_))));
        assert!(matches!(thermal_output_density(1, 0.4, -0.1, 5.0, None), Err(FockError::Domain(_))));
    }

    #[test]
    fn initial_dim_rule() {
        assert_eq!(initial_dim(1, 0.0, 0.0), 4);
        // 2(1 − e^{−2d})N_th = 1 adds 8 levels.
        let d = 0.5 * (2f64).ln();
        assert_eq!(initial_dim(0, d, 1.0), 11);
    }
}

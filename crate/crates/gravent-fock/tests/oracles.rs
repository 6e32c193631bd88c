use std::f64::consts::{FRAC_PI_4, PI};

use gravent_fock::*;
use num_complex::Complex64;

/// Dense four-index state `ρ[a, b, c, d] = ⟨a, b|ρ|c, d⟩` used by the oracles.
struct Dense {
    d: usize,
    v: Vec<Complex64>,
}

impl Dense {
    fn from(rho: &FockDensityMatrix) -> Self {
        let d = rho.dim_a();
        let mut v = vec![Complex64::new(0.0, 0.0); d.pow(4)];
        for (a, b, c, e, z) in rho.iter() {
            v[((a * d + b) * d + c) * d + e] = z;
        }
        Dense { d, v }
    }

    fn at(&self, a: usize, b: usize, c: usize, e: usize) -> Complex64 {
        self.v[((a * self.d + b) * self.d + c) * self.d + e]
    }

    /// Applies a single-mode channel whose Kraus operators each move photon
    /// number by a fixed step: `kraus(k, out) = Some((in, amplitude))`.
    fn apply(&self, mode_a: bool, nk: usize, kraus: impl Fn(usize, usize) -> Option<(usize, f64)>) -> Self {
        let d = self.d;
        let mut v = vec![Complex64::new(0.0, 0.0); d.pow(4)];
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for e in 0..d {
                        let mut acc = Complex64::new(0.0, 0.0);
                        for k in 0..nk {
                            if mode_a {
                                if let (Some((i, x)), Some((j, y))) = (kraus(k, a), kraus(k, c)) {
                                    acc += self.at(i, b, j, e) * (x * y);
                                }
                            } else if let (Some((i, x)), Some((j, y))) = (kraus(k, b), kraus(k, e)) {
                                acc += self.at(a, i, c, j) * (x * y);
                            }
                        }
                        v[((a * d + b) * d + c) * d + e] = acc;
                    }
                }
            }
        }
        Dense { d, v }
    }
}

fn binom(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Thermal channel as pure loss `τ/G` followed by a quantum-limited
/// amplifier of gain `G = 1 + (1 − τ)N`.
fn kraus_channel(rho: &Dense, tau: f64, n_th: f64) -> Dense {
    let g = 1.0 + (1.0 - tau) * n_th;
    let eta = tau / g;
    let d = rho.d;
    let loss = move |k: usize, out: usize| {
        let i = out + k;
        (i < d).then(|| (i, (binom(i, k) * eta.powi(out as i32) * (1.0 - eta).powi(k as i32)).sqrt()))
    };
    let amp = move |k: usize, out: usize| {
        (out >= k).then(|| {
            let m = out - k;
            (m, (binom(m + k, k) * (1.0 - 1.0 / g).powi(k as i32) / g.powi(m as i32 + 1)).sqrt())
        })
    };
    let mut r = rho.apply(true, d, loss);
    r = r.apply(true, d, amp);
    r = r.apply(false, d, loss);
    r.apply(false, d, amp)
}

#[test]
fn thermal_elements_match_kraus_channel() {
    for &(n, th, damping, n_th) in &[(1, FRAC_PI_4, 0.3, 0.2), (2, 0.5, 0.05, 1.0), (3, 1.1, 0.01, 4.0)] {
        let big = 24;
        let pure = pure_output_density(n, th, Some((big, big))).unwrap();
        let want = kraus_channel(&Dense::from(&pure), (-2.0 * damping as f64).exp(), n_th);
        let cfg = FockConfig { trace_tol: 1.0, ..FockConfig::default() };
        let d = 6;
        let rho = thermal_output_density_with(n, th, damping, n_th, Some((d, d)), &cfg).unwrap();
        let mut worst = 0.0f64;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for e in 0..d {
                        worst = worst.max((rho.element(a, b, c, e) - want.at(a, b, c, e)).norm());
                    }
                }
            }
        }
        assert!(worst < 1e-12, "n={n}: worst deviation {worst:e}");
    }
}

/// Associated Laguerre `L_n^{(α)}(x)` by the three-term recurrence.
fn laguerre(n: usize, alpha: usize, x: f64) -> f64 {
    let alpha = alpha as f64;
    let (mut l0, mut l1) = (1.0, 1.0 + alpha - x);
    if n == 0 {
        return l0;
    }
    for k in 1..n {
        let k = k as f64;
        let l2 = ((2.0 * k + 1.0 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    l1
}

/// `∫ d²α/π e^{−a|α|²} α^p α*^q L(|α|²)` by a tensor-product polar rule:
/// trapezoid in angle, composite Simpson in radius on [0, 12].
fn polar_integral(a: f64, p: usize, q: usize, lag_n: usize, lag_alpha: usize) -> Complex64 {
    let na = 64;
    let mut ang = Complex64::new(0.0, 0.0);
    for j in 0..na {
        let phi = 2.0 * PI * j as f64 / na as f64;
        ang += Complex64::from_polar(1.0, (p as f64 - q as f64) * phi);
    }
    ang *= 2.0 * PI / na as f64;
    let nr = 4000;
    let h = 12.0 / nr as f64;
    let f = |r: f64| r * (-a * r * r).exp() * r.powi((p + q) as i32) * laguerre(lag_n, lag_alpha, r * r);
    let mut rad = f(0.0) + f(12.0);
    for i in 1..nr {
        rad += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    rad *= h / 3.0;
    ang * rad / PI
}

fn quadrature_element(n: usize, th: f64, damping: f64, n_th: f64, m: usize, mp: usize, l: usize, lp: usize) -> Complex64 {
    let a = 1.0 + (1.0 - (-2.0 * damping).exp()) * n_th;
    let c11 = Complex64::new((-damping).exp() * th.cos(), 0.0);
    let c21 = Complex64::new(0.0, -(-damping).exp() * th.sin());
    let fact = |k: usize| (1..=k).fold(1.0, |acc, i| acc * i as f64);
    let pre = (fact(m.min(l)) * fact(mp.min(lp)) / (fact(m.max(l)) * fact(mp.max(lp)))).sqrt();
    let side = |m: usize, l: usize, x: usize, y: usize| {
        if l >= m {
            polar_integral(a, x, l - m + y, m, l - m)
        } else {
            let s = if (m - l) % 2 == 0 { 1.0 } else { -1.0 };
            polar_integral(a, m - l + x, y, l, m - l) * s
        }
    };
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        for kp in 0..=k {
            for kpp in 0..=k {
                let sign = if kpp % 2 == 0 { 1.0 } else { -1.0 };
                let j = c11.powu((kp + kpp) as u32) * c21.powu((2 * k - kp - kpp) as u32)
                    * (binom(n, k) * binom(k, kp) * binom(k, kpp) / fact(k) * sign);
                sum += j * side(m, l, kp, kpp) * side(mp, lp, k - kp, k - kpp);
            }
        }
    }
    sum * pre
}

#[test]
fn thermal_elements_match_polar_quadrature() {
    let d = 5;
    let cfg = FockConfig { trace_tol: 1.0, ..FockConfig::default() };
    for &(damping, n_th) in &[(0.0, 0.0), (1e-3, 50.0), (0.2, 0.7)] {
        let rho = thermal_output_density_with(1, FRAC_PI_4, damping, n_th, Some((d, d)), &cfg).unwrap();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for e in 0..d {
                        let q = quadrature_element(1, FRAC_PI_4, damping, n_th, a, b, c, e);
                        let z = rho.element(a, b, c, e);
                        assert!((z - q).norm() < 1e-9, "({a}{b},{c}{e}) {z} vs {q}");
                    }
                }
            }
        }
    }
}

#[test]
fn vacuum_input_gives_thermal_product() {
    // 2(1 − e^{−2d})N_th = 1: mean occupation 1/2 per mode, populations
    // (1/2)^m / (3/2)^{m+1} from the matching Gaussian covariance 2·1.
    let damping = 0.1f64;
    let n_th = 0.5 / -(-2.0 * damping).exp_m1();
    let rho = thermal_output_density(0, 0.9, damping, n_th, None).unwrap();
    let p = |m: usize| 0.5f64.powi(m as i32) / 1.5f64.powi(m as i32 + 1);
    for (m, mp, l, lp, z) in rho.iter() {
        let want = if m == l && mp == lp { p(m) * p(mp) } else { 0.0 };
        assert!((z.re - want).abs() < 1e-13 && z.im.abs() < 1e-13);
    }
    assert!(rho.trace_deficit() <= 1e-8);
}

#[test]
fn formula_and_eigensolve_agree_on_pure_states() {
    for n in 0..=5 {
        for i in 0..50 {
            let th = i as f64 * PI / 49.0;
            let rho = pure_output_density(n, th, None).unwrap();
            let numeric = ppt_negativity(&rho).unwrap();
            let formula = pure_fock_negativity(n, th);
            assert!((numeric - formula).abs() <= 1e-10, "n={n} θ={th}: {numeric} vs {formula}");
        }
    }
}

#[test]
fn largest_supported_n_stays_physical() {
    let rho = thermal_output_density(10, 0.3, 1e-3, 20.0, None).unwrap();
    assert!(rho.trace_deficit() <= 1e-8);
    assert!(rho.is_hermitian());
    assert!(rho.min_eigenvalue() >= -1e-8);
}

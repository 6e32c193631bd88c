use gravent_gaussian::{CovMat4, product_state};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded generator of separable two-mode covariance matrices: convex
/// mixtures of up to eight products of squeezed, rotated thermal states,
/// with random displacements that add classical correlations.
pub struct SeparableSampler {
    rng: ChaCha8Rng,
}

impl SeparableSampler {
    pub const MAX_COMPONENTS: usize = 8;

    pub fn new(seed: u64) -> Self {
        SeparableSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn sample(&mut self) -> CovMat4 {
        let k = self.rng.random_range(1..=Self::MAX_COMPONENTS);
        let mut weights: Vec<f64> = (0..k).map(|_| self.rng.random_range(0.05..1.0)).collect();
        let total: f64 = weights.iter().sum();
        weights.iter_mut().for_each(|w| *w /= total);

        let mut v = [[0.0; 4]; 4];
        let mut shifts = Vec::with_capacity(k);
        let spread = self.rng.random_range(0.0..1.5);
        for &w in &weights {
            let nu_a = self.rng.random_range(1.0..3.0);
            let nu_b = self.rng.random_range(1.0..3.0);
            let s_a = self.rng.random_range(-1.2..1.2);
            let s_b = self.rng.random_range(-1.2..1.2);
            let phi_a = self.rng.random_range(0.0..std::f64::consts::PI);
            let phi_b = self.rng.random_range(0.0..std::f64::consts::PI);
            let c = product_state(nu_a, s_a, phi_a, nu_b, s_b, phi_b);
            for i in 0..4 {
                for j in 0..4 {
                    v[i][j] += w * c.get(i, j);
                }
            }
            let d: [f64; 4] = std::array::from_fn(|_| spread * self.rng.random_range(-1.0..1.0));
            shifts.push(d);
        }
        let mean: [f64; 4] = std::array::from_fn(|i| weights.iter().zip(&shifts).map(|(w, d)| w * d[i]).sum());
        for (w, d) in weights.iter().zip(&shifts) {
            for i in 0..4 {
                for j in 0..4 {
                    v[i][j] += w * (d[i] - mean[i]) * (d[j] - mean[j]);
                }
            }
        }
        CovMat4::symmetrized(v)
    }
}

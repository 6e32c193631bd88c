use std::io::{self, Write};

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

/// Hermiticity tolerance on entries.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// One photon-number sector `|m, s − m⟩`, `m ∈ m_lo .. m_lo + len`.
#[derive(Debug, Clone, PartialEq)]
struct Block {
    m_lo: usize,
    len: usize,
    data: Vec<Complex64>,
}

/// Two-mode density matrix on a truncated Fock space.
///
/// Elements `⟨m, m′|ρ|ℓ, ℓ′⟩` vanish unless `m + m′ = ℓ + ℓ′`, so storage is
/// one dense block per total photon number.
#[derive(Debug, Clone, PartialEq)]
pub struct FockDensityMatrix {
    dim_a: usize,
    dim_b: usize,
    blocks: Vec<Block>,
    trace_deficit: f64,
}

/// Parameters recorded in the dump header.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DumpHeader {
    pub n: usize,
    pub theta: f64,
    pub damping: f64,
    pub n_th: f64,
}

impl FockDensityMatrix {
    /// Fills every selection-rule-allowed element from `f(m, m′, ℓ, ℓ′)`.
    pub fn from_fn(dim_a: usize, dim_b: usize, mut f: impl FnMut(usize, usize, usize, usize) -> Complex64) -> Self {
        assert!(dim_a >= 1 && dim_b >= 1);
        let mut blocks = Vec::with_capacity(dim_a + dim_b - 1);
        for s in 0..dim_a + dim_b - 1 {
            let m_lo = s.saturating_sub(dim_b - 1);
            let m_hi = s.min(dim_a - 1);
            let len = m_hi + 1 - m_lo;
            let mut data = Vec::with_capacity(len * len);
            for m in m_lo..=m_hi {
                for l in m_lo..=m_hi {
                    data.push(f(m, s - m, l, s - l));
                }
            }
            blocks.push(Block { m_lo, len, data });
        }
        let mut rho = FockDensityMatrix { dim_a, dim_b, blocks, trace_deficit: 0.0 };
        rho.trace_deficit = 1.0 - rho.trace();
        rho
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    /// `1 − tr ρ` recorded at construction.
    pub fn trace_deficit(&self) -> f64 {
        self.trace_deficit
    }

    /// `⟨m, m′|ρ|ℓ, ℓ′⟩`, zero outside the truncation or the selection rule.
    pub fn element(&self, m: usize, mp: usize, l: usize, lp: usize) -> Complex64 {
        if m >= self.dim_a || l >= self.dim_a || mp >= self.dim_b || lp >= self.dim_b || m + mp != l + lp {
            return Complex64::new(0.0, 0.0);
        }
        let b = &self.blocks[m + mp];
        b.data[(m - b.m_lo) * b.len + (l - b.m_lo)]
    }

    pub fn trace(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| (0..b.len).map(|i| b.data[i * b.len + i].re).sum::<f64>())
            .sum()
    }

    pub fn purity(&self) -> f64 {
        self.blocks.iter().flat_map(|b| b.data.iter()).map(|z| z.norm_sqr()).sum()
    }

    /// Largest `|ρ − ρ†|` entry.
    pub fn hermiticity_error(&self) -> f64 {
        let mut worst = 0.0f64;
        for b in &self.blocks {
            for i in 0..b.len {
                for j in 0..=i {
                    let d = b.data[i * b.len + j] - b.data[j * b.len + i].conj();
                    worst = worst.max(d.norm());
                }
            }
        }
        worst
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_error() <= HERMITIAN_TOL
    }

    /// Spectrum of ρ, sector by sector.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for b in &self.blocks {
            let m = DMatrix::from_fn(b.len, b.len, |i, j| {
                0.5 * (b.data[i * b.len + j] + b.data[j * b.len + i].conj())
            });
            out.extend(SymmetricEigen::new(m).eigenvalues.iter().copied());
        }
        out
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().into_iter().fold(f64::INFINITY, f64::min)
    }

    /// Full `(dim_a·dim_b)²` matrix indexed by `m·dim_b + m′`.
    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let d = self.dim_a * self.dim_b;
        DMatrix::from_fn(d, d, |r, c| {
            self.element(r / self.dim_b, r % self.dim_b, c / self.dim_b, c % self.dim_b)
        })
    }

    /// Iterates over stored `(m, m′, ℓ, ℓ′, value)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, usize, Complex64)> + '_ {
        self.blocks.iter().enumerate().flat_map(|(s, b)| {
            (0..b.len * b.len).map(move |idx| {
                let m = b.m_lo + idx / b.len;
                let l = b.m_lo + idx % b.len;
                (m, s - m, l, s - l, b.data[idx])
            })
        })
    }

    /// Sparse triplet dump `m m' l l' re im`, one nonzero element per line,
    /// after a header line with the generating parameters.
    pub fn dump<W: Write>(&self, w: &mut W, header: &DumpHeader) -> io::Result<()> {
        writeln!(
            w,
            "# n={} theta={:.16e} damping={:.16e} n_th={:.16e} dims={}x{}",
            header.n, header.theta, header.damping, header.n_th, self.dim_a, self.dim_b
        )?;
        for (m, mp, l, lp, z) in self.iter() {
            if z.re != 0.0 || z.im != 0.0 {
                writeln!(w, "{m} {mp} {l} {lp} {:.16e} {:.16e}", z.re, z.im)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(n: usize, dims: (usize, usize)) -> FockDensityMatrix {
        FockDensityMatrix::from_fn(dims.0, dims.1, |m, mp, l, lp| {
            if m == 0 && l == 0 && mp == n && lp == n { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }
        })
    }

    #[test]
    fn block_layout_round_trips() {
        let rho = FockDensityMatrix::from_fn(3, 4, |m, mp, l, lp| {
            Complex64::new((m * 1000 + mp * 100 + l * 10 + lp) as f64, 0.0)
        });
        for m in 0..3 {
            for mp in 0..4 {
                for l in 0..3 {
                    for lp in 0..4 {
                        let z = rho.element(m, mp, l, lp);
                        if m + mp == l + lp {
                            assert_eq!(z.re, (m * 1000 + mp * 100 + l * 10 + lp) as f64);
                        } else {
                            assert_eq!(z.re, 0.0);
                        }
                    }
                }
            }
        }
        assert_eq!(rho.iter().count(), rho.blocks.iter().map(|b| b.len * b.len).sum::<usize>());
    }

    #[test]
    fn product_state_properties() {
        let rho = product(2, (2, 4));
        assert_eq!(rho.trace(), 1.0);
        assert_eq!(rho.trace_deficit(), 0.0);
        assert_eq!(rho.purity(), 1.0);
        assert!(rho.is_hermitian());
        assert!(rho.min_eigenvalue().abs() < 1e-15);
        assert_eq!(rho.to_dense()[(2, 2)], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn dump_format() {
        let rho = product(1, (2, 2));
        let mut buf = Vec::new();
        rho.dump(&mut buf, &DumpHeader { n: 0, theta: 0.5, damping: 0.0, n_th: 0.0 }).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("# n=0 theta=5.0000000000000000e-1"));
        assert!(lines[0].ends_with("dims=2x2"));
        assert_eq!(lines[1], "0 1 0 1 1.0000000000000000e0 0.0000000000000000e0");
        assert_eq!(lines.len(), 2);
    }
}

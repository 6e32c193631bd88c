/// Table of `ln k!` (equivalently `ln Γ(k+1)`) for `k ≤ max_n`.
#[derive(Debug, Clone)]
pub struct LogFactorials {
    table: Vec<f64>,
}

impl LogFactorials {
    pub fn new(max_n: usize) -> Self {
        let mut table = Vec::with_capacity(max_n + 1);
        table.push(0.0);
        // Exact products while they fit in f64 keep the small entries to
        // half an ulp; past 170! accumulate logs.
        let mut prod = 1.0f64;
        for k in 1..=max_n {
            if k <= 170 {
                prod *= k as f64;
                table.push(prod.ln());
            } else {
                let prev = table[k - 1];
                table.push(prev + (k as f64).ln());
            }
        }
        LogFactorials { table }
    }

    pub fn max_n(&self) -> usize {
        self.table.len() - 1
    }

    /// `ln n!`; panics past the table end.
    pub fn ln_factorial(&self, n: usize) -> f64 {
        self.table[n]
    }

    /// `ln Γ(x)` at positive integer `x`.
    pub fn ln_gamma(&self, x: usize) -> f64 {
        assert!(x >= 1, "ln_gamma needs a positive integer argument");
        self.table[x - 1]
    }

    /// `ln C(n, k)`, `-inf` when `k > n`.
    pub fn ln_binomial(&self, n: usize, k: usize) -> f64 {
        if k > n {
            return f64::NEG_INFINITY;
        }
        self.table[n] - self.table[k] - self.table[n - k]
    }
}

pub fn special_log_factorials(max_n: usize) -> LogFactorials {
    LogFactorials::new(max_n)
}

//! Reference computations that share no code with the library's summation path.
#![allow(dead_code)]

/// Plain Kahan accumulator (the library uses a Neumaier variant).
#[derive(Default)]
pub struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    pub fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// `ln n!` by direct summation of `ln j`.
pub fn ln_factorial(n: u64) -> f64 {
    let mut acc = Kahan::default();
    for j in 2..=n {
        acc.add((j as f64).ln());
    }
    acc.value()
}

/// Poisson weights for `n = 0..=n_hi`, built by the ratio recurrence
/// `p(n+1) = p(n)·n̄/(n+1)` in log space, anchored at the mode where
/// `ln p(m) = −n̄ + m ln n̄ − ln m!` is summed directly.
pub fn poisson_weights(nbar: f64, n_hi: u64) -> Vec<f64> {
    let m = (nbar.floor() as u64).min(n_hi);
    let mut logs = vec![0.0f64; n_hi as usize + 1];
    logs[m as usize] = -nbar + m as f64 * nbar.ln() - ln_factorial(m);
    for n in m..n_hi {
        logs[n as usize + 1] = logs[n as usize] + (nbar / (n + 1) as f64).ln();
    }
    for n in (0..m).rev() {
        logs[n as usize] = logs[n as usize + 1] - (nbar / (n + 1) as f64).ln();
    }
    logs.into_iter().map(f64::exp).collect()
}

/// Upper summation limit past which the Poisson mass is far below 1e-20.
pub fn full_range(nbar: f64) -> u64 {
    (nbar + 40.0 * nbar.sqrt() + 200.0).ceil() as u64
}

/// `W(τ)` summed over every photon number up to [`full_range`].
pub struct UntruncatedSeries {
    weights: Vec<f64>,
}

impl UntruncatedSeries {
    pub fn new(nbar: f64) -> Self {
        Self {
            weights: poisson_weights(nbar, full_range(nbar)),
        }
    }

    pub fn w(&self, tau: f64) -> f64 {
        // Smallest terms first.
        let mut idx: Vec<usize> = (0..self.weights.len()).collect();
        idx.sort_by(|&a, &b| self.weights[a].partial_cmp(&self.weights[b]).unwrap());
        let mut acc = Kahan::default();
        for n in idx {
            acc.add(self.weights[n] * (2.0 * ((n + 1) as f64).sqrt() * tau).cos());
        }
        acc.value()
    }

    /// Mass outside `[lo, hi]`.
    pub fn tail_mass(&self, lo: u64, hi: u64) -> f64 {
        let mut acc = Kahan::default();
        for (n, &w) in self.weights.iter().enumerate() {
            let n = n as u64;
            if n < lo || n > hi {
                acc.add(w);
            }
        }
        acc.value()
    }
}

/// Largest `N` with `Σ_{i≤N} i² ≤ bound`, by integer partial sums.
pub fn largest_square_sum_within(bound: f64) -> u64 {
    let mut total: u128 = 0;
    let mut n: u64 = 0;
    loop {
        let next = total + ((n + 1) as u128).pow(2);
        if next as f64 > bound {
            return n;
        }
        total = next;
        n += 1;
    }
}

/// Brute-force literal count: `Σ (iT)²/2 ≤ p` ⇔ `Σ i² ≤ 2p(n̄+1)/π²`.
pub fn literal_count(nbar: f64, p_th: f64) -> u64 {
    largest_square_sum_within(2.0 * p_th * (nbar + 1.0) / (std::f64::consts::PI.powi(2)))
}

/// Brute-force envelope-loss count by forward partial sums.
pub fn envelope_count(nbar: f64, p_th: f64) -> u64 {
    let t = std::f64::consts::PI / (nbar + 1.0).sqrt();
    let mut acc = Kahan::default();
    let mut n = 0u64;
    loop {
        let tau = (n + 1) as f64 * t;
        acc.add(1.0 - (-nbar * tau * tau / (2.0 * (nbar + 1.0))).exp());
        if acc.value() > p_th {
            return n;
        }
        n += 1;
    }
}

/// Scalar scan for the per-period criterion `τ_N²·n̄/(2(n̄+1)) ≤ −ln(1−p)`.
pub fn per_period_count(nbar: f64, p_th: f64) -> u64 {
    let t = std::f64::consts::PI / (nbar + 1.0).sqrt();
    let limit = -(1.0 - p_th).ln();
    let mut n = 0u64;
    while {
        let tau = (n + 1) as f64 * t;
        tau * tau * nbar / (2.0 * (nbar + 1.0)) <= limit
    } {
        n += 1;
    }
    n
}

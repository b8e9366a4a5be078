//! Poisson photon-number weights in log space and their truncation window.
//!
//! Log weights use the saddle-point form `ln p(n) = −bd0(n, n̄) − ½ln(2πn) −
//! δ(n)`, where `bd0(x, m) = x ln(x/m) + m − x` is evaluated by a series near
//! `x ≈ m` and `δ` is the Stirling remainder. Neither large `n̄ⁿ` nor `n!`
//! is formed, so the weights stay accurate for `n̄` up to about `10¹²`.

use std::f64::consts::PI;

use crate::error::{positive, Error, Result};

/// Half-width of the default window in units of `√n̄`.
pub const WINDOW_SIGMAS: f64 = 8.0;

/// The window always reaches at least this photon number.
pub const WINDOW_FLOOR: u64 = 30;

/// Stirling remainder `ln n! − (n + ½) ln n + n − ½ ln 2π` for `n = 1..=15`.
const STIRLING_REMAINDER: [f64; 16] = [
    0.0,
    0.08106146679532726,
    0.0413406959554093,
    0.02767792568499834,
    0.020790672103765093,
    0.016644691189821193,
    0.013876128823070748,
    0.01189670994589177,
    0.010411265261972096,
    0.009255462182712733,
    0.00833056343336287,
    0.007573675487951841,
    0.00694284010720953,
    0.006408994188004207,
    0.0059513701127588475,
    0.005554733551962801,
];

pub(crate) fn stirling_remainder(n: u64) -> f64 {
    const S0: f64 = 1.0 / 12.0;
    const S1: f64 = 1.0 / 360.0;
    const S2: f64 = 1.0 / 1260.0;
    const S3: f64 = 1.0 / 1680.0;
    const S4: f64 = 1.0 / 1188.0;

    if n < STIRLING_REMAINDER.len() as u64 {
        return STIRLING_REMAINDER[n as usize];
    }
    let x = n as f64;
    let xx = x * x;
    if n > 500 {
        (S0 - S1 / xx) / x
    } else if n > 80 {
        (S0 - (S1 - S2 / xx) / xx) / x
    } else if n > 35 {
        (S0 - (S1 - (S2 - S3 / xx) / xx) / xx) / x
    } else {
        (S0 - (S1 - (S2 - (S3 - S4 / xx) / xx) / xx) / xx) / x
    }
}

/// Deviance term `x ln(x/m) + m − x`, accurate when `x` is close to `m`.
pub(crate) fn deviance(x: f64, m: f64) -> f64 {
    if x == 0.0 {
        return m;
    }
    if (x - m).abs() < 0.1 * (x + m) {
        let mut v = (x - m) / (x + m);
        let mut s = (x - m) * v;
        if s.abs() < f64::MIN_POSITIVE {
            return s;
        }
        let mut ej = 2.0 * x * v;
        v *= v;
        for j in 1..1000 {
            ej *= v;
            let next = s + ej / (2 * j + 1) as f64;
            if next == s {
                return next;
            }
            s = next;
        }
        s
    } else {
        x * (x / m).ln() + m - x
    }
}

/// `ln(e^{−n̄} n̄ⁿ / n!)`.
pub fn poisson_log_weight(n: u64, nbar: f64) -> f64 {
    if n == 0 {
        return -nbar;
    }
    let x = n as f64;
    -stirling_remainder(n) - deviance(x, nbar) - 0.5 * (2.0 * PI * x).ln()
}

/// Log of the Chernoff bound on `P(X ≥ a)` (for `a > n̄`) or `P(X ≤ a)` (for `a < n̄`).
fn log_tail_bound(a: u64, nbar: f64) -> f64 {
    -deviance(a as f64, nbar)
}

/// Range of photon numbers kept in the series, with a bound on the
/// Poisson mass that falls outside it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationWindow {
    pub n_min: u64,
    pub n_max: u64,
    /// Upper bound on the Poisson mass outside `[n_min, n_max]`.
    pub tail_mass_bound: f64,
}

impl TruncationWindow {
    pub fn len(&self) -> usize {
        (self.n_max - self.n_min + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, n: u64) -> bool {
        (self.n_min..=self.n_max).contains(&n)
    }
}

/// Chooses a window around `n̄` whose outside Poisson mass is at most `tail_tol`.
///
/// Starts from `n̄ ± 8√n̄` (with the upper end at least 30) and widens each
/// side until the Chernoff bound `exp(−bd0(a, n̄))` on that tail is at most
/// `tail_tol / 2`. The bound holds for every `n̄`, so no Gaussian
/// approximation is involved even at very large `n̄`.
pub fn truncation_window(nbar: f64, tail_tol: f64) -> Result<TruncationWindow> {
    let nbar = positive("nbar", nbar)?;
    if !(tail_tol > 0.0 && tail_tol < 1.0) {
        return Err(Error::InvalidParameter {
            name: "tail_tol",
            value: tail_tol,
            reason: "must lie in (0, 1)",
        });
    }
    let sigma = nbar.sqrt();
    let half_width = (WINDOW_SIGMAS * sigma).ceil();
    let step = (sigma / 4.0).ceil().max(1.0) as u64;
    let log_side = (tail_tol / 2.0).ln();

    let mut n_min = (nbar.floor() - half_width).max(0.0) as u64;
    let mut n_max = ((nbar.ceil() + half_width) as u64).max(WINDOW_FLOOR);

    while log_tail_bound(n_max + 1, nbar) > log_side {
        n_max += step;
    }
    while n_min > 0 && log_tail_bound(n_min - 1, nbar) > log_side {
        n_min = n_min.saturating_sub(step);
    }

    let upper = log_tail_bound(n_max + 1, nbar).exp();
    let lower = if n_min == 0 {
        0.0
    } else {
        log_tail_bound(n_min - 1, nbar).exp()
    };
    Ok(TruncationWindow {
        n_min,
        n_max,
        tail_mass_bound: upper + lower,
    })
}

/// Poisson weights over a truncation window, stored in ascending `n`.
#[derive(Debug, Clone)]
pub struct PoissonWeights {
    nbar: f64,
    window: TruncationWindow,
    weights: Vec<f64>,
    mode: usize,
}

impl PoissonWeights {
    pub fn new(nbar: f64, tail_tol: f64) -> Result<Self> {
        let window = truncation_window(nbar, tail_tol)?;
        let weights: Vec<f64> = (window.n_min..=window.n_max)
            .map(|n| poisson_log_weight(n, nbar).exp())
            .collect();
        let mode = (nbar.floor() as u64).clamp(window.n_min, window.n_max) - window.n_min;
        Ok(Self {
            nbar,
            window,
            weights,
            mode: mode as usize,
        })
    }

    pub fn nbar(&self) -> f64 {
        self.nbar
    }

    pub fn window(&self) -> TruncationWindow {
        self.window
    }

    /// Weight of photon number `n`, or zero outside the window.
    pub fn weight(&self, n: u64) -> f64 {
        if self.window.contains(n) {
            self.weights[(n - self.window.n_min) as usize]
        } else {
            0.0
        }
    }

    /// Visits `(n, weight)` pairs from the mode outward in non-increasing weight order.
    ///
    /// The distribution is unimodal, so each side of the mode is already
    /// sorted and a two-pointer merge gives the global order.
    pub fn for_each_descending(&self, mut f: impl FnMut(u64, f64)) {
        let w = &self.weights;
        let base = self.window.n_min;
        f(base + self.mode as u64, w[self.mode]);
        let mut left = self.mode;
        let mut right = self.mode + 1;
        loop {
            let take_left = match (left > 0, right < w.len()) {
                (true, true) => w[left - 1] >= w[right],
                (true, false) => true,
                (false, true) => false,
                (false, false) => break,
            };
            if take_left {
                left -= 1;
                f(base + left as u64, w[left]);
            } else {
                f(base + right as u64, w[right]);
                right += 1;
            }
        }
    }

    /// Total weight inside the window.
    pub fn mass(&self) -> f64 {
        let mut acc = crate::CompensatedSum::new();
        self.for_each_descending(|_, w| acc.add(w));
        acc.value()
    }
}

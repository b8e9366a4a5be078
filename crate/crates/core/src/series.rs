//! Exact coherent-state Rabi signal.
//!
//! For an atom starting in the excited state and a coherent drive of mean
//! photon number `n̄`,
//!
//! ```text
//! W(τ) = 2P(τ/g) − 1 = Σₙ e^{−n̄} n̄ⁿ/n! · cos(2√(n+1)·τ),   τ = g·t.
//! ```
//!
//! The infinite sum is truncated to a [`TruncationWindow`] and accumulated in
//! descending-weight order with [`CompensatedSum`].

use rayon::prelude::*;

use crate::envelope::{gauss_envelope, w_envelope};
use crate::error::{positive, Error, Result};
use crate::poisson::{PoissonWeights, TruncationWindow};
use crate::summation::CompensatedSum;

/// Default bound on the Poisson mass dropped by truncation.
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

/// Dimensionless drive: mean photon number and an optional coupling `g` in
/// rad/s that only converts between time `t` and `τ = g·t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RabiField {
    nbar: f64,
    g: Option<f64>,
}

impl RabiField {
    pub fn new(nbar: f64) -> Result<Self> {
        Ok(Self {
            nbar: positive("nbar", nbar)?,
            g: None,
        })
    }

    pub fn with_coupling(mut self, g: f64) -> Result<Self> {
        self.g = Some(positive("g", g)?);
        Ok(self)
    }

    pub fn nbar(&self) -> f64 {
        self.nbar
    }

    pub fn coupling(&self) -> Option<f64> {
        self.g
    }
}

/// Precomputed weights for repeated evaluation of `W(τ)` at one `n̄`.
#[derive(Debug, Clone)]
pub struct RabiSeries {
    weights: PoissonWeights,
}

impl RabiSeries {
    pub fn new(nbar: f64, tail_tol: f64) -> Result<Self> {
        Ok(Self {
            weights: PoissonWeights::new(nbar, tail_tol)?,
        })
    }

    pub fn nbar(&self) -> f64 {
        self.weights.nbar()
    }

    pub fn window(&self) -> TruncationWindow {
        self.weights.window()
    }

    pub fn weights(&self) -> &PoissonWeights {
        &self.weights
    }

    /// `W(τ)`. Even in `τ`; negative arguments are accepted.
    pub fn w(&self, tau: f64) -> f64 {
        let mut acc = CompensatedSum::new();
        self.weights.for_each_descending(|n, weight| {
            let freq = 2.0 * ((n + 1) as f64).sqrt();
            acc.add(weight * (freq * tau).cos());
        });
        acc.value()
    }
}

/// One-shot `W(τ)`; builds the weight table on every call.
pub fn w_exact(tau: f64, nbar: f64, tail_tol: f64) -> Result<f64> {
    Ok(RabiSeries::new(nbar, tail_tol)?.w(tau))
}

/// Probability of finding the atom excited at time `t` seconds.
pub fn excited_probability(t: f64, field: &RabiField, tail_tol: f64) -> Result<f64> {
    let g = field.coupling().ok_or(Error::MissingCoupling)?;
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "t",
            value: t,
            reason: "must be finite and >= 0",
        });
    }
    Ok((1.0 + w_exact(g * t, field.nbar(), tail_tol)?) / 2.0)
}

/// `W(τ)` sampled on a uniform grid, with the envelope approximation and
/// the bare Gaussian envelope alongside.
#[derive(Debug, Clone, PartialEq)]
pub struct RabiTrace {
    pub nbar: f64,
    pub tau_values: Vec<f64>,
    pub w_exact: Vec<f64>,
    pub w_envelope: Vec<f64>,
    pub gauss_envelope: Vec<f64>,
}

impl RabiTrace {
    pub fn len(&self) -> usize {
        self.tau_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau_values.is_empty()
    }
}

/// Samples `count` uniformly spaced points on `[0, tau_max]`.
///
/// Points are evaluated in parallel; each is independent, so the output
/// does not depend on scheduling.
pub fn sample_trace(nbar: f64, tau_max: f64, count: usize, tail_tol: f64) -> Result<RabiTrace> {
    let tau_max = positive("tau_max", tau_max)?;
    if count < 2 {
        return Err(Error::InvalidParameter {
            name: "count",
            value: count as f64,
            reason: "must be at least 2",
        });
    }
    let series = RabiSeries::new(nbar, tail_tol)?;
    let last = (count - 1) as f64;
    let tau_values: Vec<f64> = (0..count)
        .map(|i| {
            if i + 1 == count {
                tau_max
            } else {
                tau_max * (i as f64 / last)
            }
        })
        .collect();
    let w_exact: Vec<f64> = tau_values.par_iter().map(|&tau| series.w(tau)).collect();
    Ok(RabiTrace {
        nbar,
        w_envelope: tau_values.iter().map(|&t| w_envelope(t, nbar).value).collect(),
        gauss_envelope: tau_values.iter().map(|&t| gauss_envelope(t, nbar)).collect(),
        tau_values,
        w_exact,
    })
}

/// Sign changes of a sampled signal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ZeroCrossings {
    pub sign_changes: usize,
    /// Number of places where two consecutive samples are exactly zero. A
    /// non-zero value means the grid cannot resolve the signal there.
    pub degenerate_runs: usize,
}

impl ZeroCrossings {
    /// Full periods, two crossings each.
    pub fn periods(&self) -> f64 {
        self.sign_changes as f64 / 2.0
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate_runs > 0
    }
}

/// Counts strict sign changes of a sample sequence.
///
/// Exact zeros are skipped, so a zero sample between opposite signs counts
/// once and a zero between equal signs does not count.
pub fn count_sign_changes(samples: &[f64]) -> ZeroCrossings {
    let mut out = ZeroCrossings::default();
    let mut last_sign = 0.0f64;
    let mut prev_zero = false;
    for &v in samples {
        if v == 0.0 {
            if prev_zero {
                out.degenerate_runs += 1;
            }
            prev_zero = true;
            continue;
        }
        prev_zero = false;
        let s = v.signum();
        if last_sign != 0.0 && s != last_sign {
            out.sign_changes += 1;
        }
        last_sign = s;
    }
    out
}

/// Oscillation periods in the exact channel of a trace, counted as half the
/// number of zero crossings. The grid must be fine enough that no cell holds
/// two crossings.
pub fn count_periods_by_zero_crossings(trace: &RabiTrace) -> ZeroCrossings {
    count_sign_changes(&trace.w_exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn starts_at_one() {
        for &nbar in &[0.5, 1.0, 100.0, 1e4] {
            let w = w_exact(0.0, nbar, DEFAULT_TAIL_TOL).unwrap();
            assert!((w - 1.0).abs() <= 1e-10, "nbar {nbar}: {w}");
        }
    }

    #[test]
    fn single_photon_number_limit() {
        // Tiny n̄ puts almost all weight on n = 0: W ≈ cos 2τ.
        let w = w_exact(0.7, 1e-9, DEFAULT_TAIL_TOL).unwrap();
        assert!((w - (1.4f64).cos()).abs() < 1e-8);
    }

    #[test]
    fn even_in_tau() {
        let s = RabiSeries::new(1e4, DEFAULT_TAIL_TOL).unwrap();
        for &t in &[0.1, 0.5, 1.0, 3.7] {
            assert_eq!(s.w(t).to_bits(), s.w(-t).to_bits());
        }
    }

    #[test]
    fn excited_probability_needs_coupling() {
        let field = RabiField::new(1e4).unwrap();
        assert_eq!(
            excited_probability(1.0, &field, DEFAULT_TAIL_TOL),
            Err(Error::MissingCoupling)
        );
    }

    #[test]
    fn excited_probability_matches_signal() {
        let field = RabiField::new(1e4).unwrap().with_coupling(2e5).unwrap();
        assert!((excited_probability(0.0, &field, DEFAULT_TAIL_TOL).unwrap() - 1.0).abs() < 1e-10);
        let t = 0.5 / 2e5;
        let p = excited_probability(t, &field, DEFAULT_TAIL_TOL).unwrap();
        let w = w_exact(2e5 * t, 1e4, DEFAULT_TAIL_TOL).unwrap();
        assert_eq!(p, (1.0 + w) / 2.0);
        assert!(excited_probability(-1.0, &field, DEFAULT_TAIL_TOL).is_err());
    }

    #[test]
    fn two_point_trace() {
        let tr = sample_trace(50.0, 2.5, 2, DEFAULT_TAIL_TOL).unwrap();
        assert_eq!(tr.tau_values, vec![0.0, 2.5]);
        assert_eq!(tr.len(), 2);
        assert_eq!(tr.w_envelope.len(), 2);
        assert_eq!(tr.gauss_envelope.len(), 2);
    }

    #[test]
    fn trace_rejects_bad_grid() {
        assert!(sample_trace(1e4, 0.0, 10, DEFAULT_TAIL_TOL).is_err());
        assert!(sample_trace(1e4, 1.0, 1, DEFAULT_TAIL_TOL).is_err());
        assert!(sample_trace(-1.0, 1.0, 10, DEFAULT_TAIL_TOL).is_err());
    }

    #[test]
    fn sign_changes_of_synthetic_signals() {
        assert_eq!(count_sign_changes(&[1.0, 2.0, 0.5, 3.0]).periods(), 0.0);
        for k in 1..6 {
            let xs: Vec<f64> = (0..=1000)
                .map(|i| (2.0 * PI * k as f64 * i as f64 / 1000.0).cos())
                .collect();
            let p = count_sign_changes(&xs).periods();
            assert!((p - k as f64).abs() <= 0.5, "k = {k}: {p}");
        }
    }

    #[test]
    fn zeros_on_grid() {
        let c = count_sign_changes(&[1.0, 0.0, -1.0]);
        assert_eq!(c.sign_changes, 1);
        assert!(!c.is_degenerate());
        assert_eq!(count_sign_changes(&[1.0, 0.0, 1.0]).sign_changes, 0);
        let c = count_sign_changes(&[1.0, 0.0, 0.0, -1.0]);
        assert_eq!(c.sign_changes, 1);
        assert!(c.is_degenerate());
    }
}

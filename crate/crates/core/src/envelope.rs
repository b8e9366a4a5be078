//! Closed-form collapse envelope and mean Rabi frequency.
//!
//! For `τ < √n̄` the coherent-state signal is well approximated by
//! `W(τ) ≈ cos(2√(n̄+1)·τ) · exp(−n̄τ²/(2(n̄+1)))`.

use std::f64::consts::PI;

/// `exp(−n̄τ² / (2(n̄+1)))`. Tends to `exp(−τ²/2)` as `n̄ → ∞`.
pub fn gauss_envelope(tau: f64, nbar: f64) -> f64 {
    (-nbar / (2.0 * (nbar + 1.0)) * tau * tau).exp()
}

/// Approximate signal value together with whether `τ` lies inside the
/// approximation's validity domain `τ < √n̄`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeValue {
    pub value: f64,
    pub in_domain: bool,
}

/// Gaussian-envelope approximation of `W(τ)`. Computed for any `τ`; the
/// result is flagged when `τ ≥ √n̄`.
pub fn w_envelope(tau: f64, nbar: f64) -> EnvelopeValue {
    EnvelopeValue {
        value: (rabi_angular_frequency(nbar) * tau).cos() * gauss_envelope(tau, nbar),
        in_domain: tau < nbar.sqrt(),
    }
}

/// Mean Rabi angular frequency `2√(n̄+1)` per unit `τ`.
pub fn rabi_angular_frequency(nbar: f64) -> f64 {
    2.0 * (nbar + 1.0).sqrt()
}

/// Mean Rabi period `π/√(n̄+1)` in units of `τ`.
pub fn rabi_period(nbar: f64) -> f64 {
    PI / (nbar + 1.0).sqrt()
}

/// Number of mean Rabi periods in an interval of length `tau_len`.
pub fn periods_in_interval(nbar: f64, tau_len: f64) -> f64 {
    tau_len * (nbar + 1.0).sqrt() / PI
}

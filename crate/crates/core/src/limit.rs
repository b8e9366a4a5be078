//! Decoherence limit `N(χ)` on the number of usable Rabi periods.
//!
//! Peaks sit at `τᵢ = i·T` with `T = π/√(n̄+1)`. With the quadratic loss
//! `τᵢ²/2` per peak and a budget `p_th`, summing `Σ i²` gives the closed form
//! `N < ∛(6(n̄+1)p_th/π²)`. The integer methods here count peaks one at a
//! time instead of inverting that cubic, so boundary cases never depend on
//! rounding a cube root.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::envelope::rabi_period;
use crate::error::{Error, Result};
use crate::series::{RabiSeries, DEFAULT_TAIL_TOL};
use crate::summation::CompensatedSum;

/// Amplitude loss charged to each peak in the cumulative sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LossModel {
    /// `τᵢ²/2`, the small-`τ` expansion of the envelope.
    Literal,
    /// `1 − exp(−n̄τᵢ²/(2(n̄+1)))`.
    Envelope,
    /// `1 − max|W|` over the exact signal near `τᵢ`.
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LimitMethod {
    ClosedForm,
    #[default]
    CumulativeLiteral,
    CumulativeEnvelope,
    ExactPeak,
    /// Largest `N` whose own envelope loss stays within `p_th`, without accumulating.
    PerPeriod,
}

impl LimitMethod {
    pub const ALL: [LimitMethod; 5] = [
        LimitMethod::ClosedForm,
        LimitMethod::CumulativeLiteral,
        LimitMethod::CumulativeEnvelope,
        LimitMethod::ExactPeak,
        LimitMethod::PerPeriod,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LimitMethod::ClosedForm => "closed_form",
            LimitMethod::CumulativeLiteral => "cumulative_literal",
            LimitMethod::CumulativeEnvelope => "cumulative_envelope",
            LimitMethod::ExactPeak => "exact_peak",
            LimitMethod::PerPeriod => "per_period",
        }
    }
}

impl fmt::Display for LimitMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LimitMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "closed" | "closed_form" => Ok(LimitMethod::ClosedForm),
            "literal" | "cumulative_literal" => Ok(LimitMethod::CumulativeLiteral),
            "envelope" | "cumulative_envelope" => Ok(LimitMethod::CumulativeEnvelope),
            "exact" | "exact_peak" => Ok(LimitMethod::ExactPeak),
            "per-period" | "per_period" => Ok(LimitMethod::PerPeriod),
            other => Err(format!("unknown limit method `{other}`")),
        }
    }
}

/// One evaluation of the decoherence limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitEstimate {
    pub method: LimitMethod,
    /// Real for [`LimitMethod::ClosedForm`], a non-negative integer otherwise.
    pub value: f64,
    pub nbar: f64,
    pub p_th: f64,
}

impl LimitEstimate {
    /// Number of whole periods available.
    pub fn periods(&self) -> u64 {
        self.value.floor().max(0.0) as u64
    }
}

fn check_inputs(nbar: f64, p_th: f64) -> Result<()> {
    crate::error::positive("nbar", nbar)?;
    if !(0.0..1.0).contains(&p_th) {
        return Err(Error::InvalidParameter {
            name: "p_th",
            value: p_th,
            reason: "must lie in [0, 1)",
        });
    }
    Ok(())
}

/// `∛(6(n̄+1)p_th/π²)`, an upper bound on the cumulative-literal count.
pub fn n_chi_closed_form(nbar: f64, p_th: f64) -> f64 {
    (6.0 * (nbar + 1.0) * p_th / (PI * PI)).cbrt()
}

/// Largest `N` with `Σ_{i=1..N} lossᵢ ≤ p_th`.
pub fn n_chi_cumulative(nbar: f64, p_th: f64, model: LossModel) -> Result<u64> {
    check_inputs(nbar, p_th)?;
    let period = rabi_period(nbar);
    match model {
        LossModel::Literal => Ok(count_cumulative(p_th, |i| {
            let tau = i as f64 * period;
            tau * tau / 2.0
        })),
        LossModel::Envelope => Ok(count_cumulative(p_th, |i| envelope_loss(i as f64 * period, nbar))),
        LossModel::Exact => {
            let series = RabiSeries::new(nbar, DEFAULT_TAIL_TOL)?;
            let mut acc = CompensatedSum::new();
            let mut n = 0u64;
            loop {
                let i = n + 1;
                let peak = exact_peak(&series, i, period)?;
                acc.add(1.0 - peak);
                if acc.value() > p_th {
                    return Ok(n);
                }
                n = i;
            }
        }
    }
}

/// Largest `N` with `1 − gauss_envelope(N·T) ≤ p_th`.
pub fn n_chi_per_period(nbar: f64, p_th: f64) -> Result<u64> {
    check_inputs(nbar, p_th)?;
    let period = rabi_period(nbar);
    let mut n = 0u64;
    while envelope_loss((n + 1) as f64 * period, nbar) <= p_th {
        n += 1;
    }
    Ok(n)
}

/// Evaluates one method.
pub fn estimate(nbar: f64, p_th: f64, method: LimitMethod) -> Result<LimitEstimate> {
    check_inputs(nbar, p_th)?;
    let value = match method {
        LimitMethod::ClosedForm => n_chi_closed_form(nbar, p_th),
        LimitMethod::CumulativeLiteral => n_chi_cumulative(nbar, p_th, LossModel::Literal)? as f64,
        LimitMethod::CumulativeEnvelope => n_chi_cumulative(nbar, p_th, LossModel::Envelope)? as f64,
        LimitMethod::ExactPeak => n_chi_cumulative(nbar, p_th, LossModel::Exact)? as f64,
        LimitMethod::PerPeriod => n_chi_per_period(nbar, p_th)? as f64,
    };
    Ok(LimitEstimate {
        method,
        value,
        nbar,
        p_th,
    })
}

fn envelope_loss(tau: f64, nbar: f64) -> f64 {
    -(-nbar / (2.0 * (nbar + 1.0)) * tau * tau).exp_m1()
}

fn count_cumulative(p_th: f64, loss: impl Fn(u64) -> f64) -> u64 {
    let mut acc = CompensatedSum::new();
    let mut n = 0u64;
    loop {
        acc.add(loss(n + 1));
        if acc.value() > p_th {
            return n;
        }
        n += 1;
    }
}

/// Local maximum of `|W|` nearest `τᵢ = i·T`.
///
/// `|W|` also peaks at the half-period troughs `τᵢ ± T/2`, so the search is
/// bracketed to `τᵢ ± T/4`, where `|W|` has a single hump.
fn exact_peak(series: &RabiSeries, i: u64, period: f64) -> Result<f64> {
    let center = i as f64 * period;
    let (lo, hi) = (center - period / 4.0, center + period / 4.0);
    let (tau, value) = golden_section_max(|t| series.w(t).abs(), lo, hi, period * 1e-9);
    let edge = (hi - lo) * 1e-3;
    if tau - lo < edge || hi - tau < edge {
        return Err(Error::Bracketing { peak: i, tau });
    }
    Ok(value)
}

/// Golden-section search for the maximum of a unimodal function on `[lo, hi]`.
pub(crate) fn golden_section_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Outcome of comparing a circuit's logical depth with a decoherence limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibilityReport {
    pub chi: u64,
    /// Rabi periods consumed by one gate.
    pub periods_per_gate: f64,
    /// `⌈χ · periods_per_gate⌉`.
    pub required_periods: u64,
    pub limit: LimitEstimate,
    pub feasible: bool,
    /// `⌊N⌋ − required_periods`.
    pub margin: i64,
}

impl FeasibilityReport {
    pub fn new(chi: u64, periods_per_gate: f64, limit: LimitEstimate) -> Result<Self> {
        let ppg = crate::error::positive("periods_per_gate", periods_per_gate)?;
        let required = (chi as f64 * ppg).ceil() as u64;
        let available = limit.periods();
        Ok(Self {
            chi,
            periods_per_gate: ppg,
            required_periods: required,
            limit,
            feasible: required <= available,
            margin: available as i64 - required as i64,
        })
    }
}

/// Checks `χ ≤ ⌊N⌋` for the chosen method, one Rabi period per gate.
pub fn feasibility(chi: u64, nbar: f64, p_th: f64, method: LimitMethod) -> Result<FeasibilityReport> {
    FeasibilityReport::new(chi, 1.0, estimate(nbar, p_th, method)?)
}

/// Wall-clock seconds to run `gate_count` gates at `gate_rate` Hz on
/// `parallelism` gates at once.
pub fn runtime_estimate(gate_count: f64, gate_rate: f64, parallelism: f64) -> f64 {
    gate_count / (gate_rate * parallelism)
}

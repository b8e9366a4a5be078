//! Decoherence limits on single-qubit logical depth for coherent-field gates.
//!
//! A two-level system driven by a coherent field does not oscillate forever:
//! each photon-number component of the field drives Rabi oscillation at its
//! own frequency `2g√(n+1)`, and the Poisson-weighted superposition of these
//! components collapses under a Gaussian envelope. Only a bounded number of
//! oscillation periods keep an amplitude close enough to one to satisfy a
//! gate-error threshold `p_th`. This crate computes that bound and compares
//! it with the depth of logical operation `χ` of a concrete circuit, the
//! largest number of operations landing on one qubit within one
//! error-correction period.
//!
//! The pieces:
//!
//! - [`pulse`]: mean photon number `n̄` of a drive pulse from its physical
//!   parameters.
//! - [`poisson`] and [`series`]: the exact oscillation signal `W(τ)` as a
//!   truncated, log-space, compensated Poisson sum, with traces and
//!   zero-crossing counts.
//! - [`envelope`]: the Gaussian collapse envelope, its approximation of
//!   `W(τ)`, and the mean Rabi frequency and period.
//! - [`limit`]: the decoherence limit `N(χ)` by closed form, cumulative loss
//!   summation, exact peak search, and a per-period criterion; feasibility
//!   verdicts and runtime estimates.
//! - [`circuit`]: a small line-oriented netlist format and the `χ` count.
//!
//! ```
//! use decolimit::{limit, CoherentPulse};
//!
//! let pulse = CoherentPulse::new(1e15, 1e-7, 1e-3)
//!     .unwrap()
//!     .with_photon_energy(6e-19)
//!     .unwrap();
//! let nbar = pulse.nbar();
//! let closed = limit::n_chi_closed_form(nbar, 1e-4);
//! assert!((closed - 21.66).abs() < 0.05);
//! ```

pub mod circuit;
pub mod envelope;
mod error;
pub mod limit;
pub mod poisson;
pub mod pulse;
pub mod series;
pub mod summation;

pub use circuit::{parse_circuit, Circuit, DepthReport, Instruction, ParseError, ParseErrorKind};
pub use envelope::{
    gauss_envelope, periods_in_interval, rabi_angular_frequency, rabi_period, w_envelope, EnvelopeValue,
};
pub use error::{Error, Result};
pub use limit::{FeasibilityReport, LimitEstimate, LimitMethod, LossModel};
pub use poisson::{poisson_log_weight, truncation_window, PoissonWeights, TruncationWindow};
pub use pulse::{CoherentPulse, PLANCK_CONSTANT, SPEED_OF_LIGHT};
pub use series::{
    count_periods_by_zero_crossings, excited_probability, sample_trace, w_exact, RabiField, RabiSeries, RabiTrace,
    ZeroCrossings, DEFAULT_TAIL_TOL,
};
pub use summation::CompensatedSum;

/// Shipped netlist of the Toffoli gate decomposed into CNOT, H and T-type gates.
pub const TOFFOLI_DECOMPOSITION: &str = include_str!("../fixtures/toffoli_decomposition.qc");

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use decolimit::{LimitMethod, DEFAULT_TAIL_TOL};

#[derive(Debug, Parser)]
#[command(
    name = "decolimit",
    version,
    about = "Decoherence limit on per-qubit logical depth for coherent-field gates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mean photon number of a drive pulse.
    Nbar(PulseArgs),
    /// Sample W(τ) to a CSV file and count oscillation periods.
    Trace(TraceArgs),
    /// Decoherence limit N(χ).
    Limit(LimitArgs),
    /// Depth of logical operation χ of a circuit file.
    Depth(DepthArgs),
    /// Compare a circuit's χ with the decoherence limit.
    Verdict(VerdictArgs),
}

#[derive(Debug, Clone, Args)]
pub struct PulseArgs {
    /// Carrier frequency in Hz.
    #[arg(long, conflicts_with = "wavelength_m")]
    pub frequency_hz: Option<f64>,

    /// Vacuum wavelength in metres, converted with c = 299792458 m/s.
    #[arg(long)]
    pub wavelength_m: Option<f64>,

    /// Pulse width in seconds.
    #[arg(long)]
    pub duration_s: Option<f64>,

    /// Peak power in watts.
    #[arg(long)]
    pub peak_power_w: Option<f64>,

    /// Photon energy in joules, replacing h·ν.
    #[arg(long)]
    pub photon_energy_j: Option<f64>,
}

impl PulseArgs {
    pub fn is_empty(&self) -> bool {
        self.frequency_hz.is_none()
            && self.wavelength_m.is_none()
            && self.duration_s.is_none()
            && self.peak_power_w.is_none()
            && self.photon_energy_j.is_none()
    }
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(long)]
    pub nbar: f64,

    #[arg(long)]
    pub tau_max: f64,

    /// Number of grid points, endpoints included.
    #[arg(long)]
    pub samples: usize,

    #[arg(long, default_value_t = DEFAULT_TAIL_TOL)]
    pub tail_tol: f64,

    /// Output CSV path.
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Mean photon number; alternatively give the pulse flags.
    #[arg(long, conflicts_with_all = ["frequency_hz", "wavelength_m", "duration_s", "peak_power_w", "photon_energy_j"])]
    pub nbar: Option<f64>,

    #[command(flatten)]
    pub pulse: PulseArgs,

    /// Gate-error threshold p_th.
    #[arg(long)]
    pub pth: f64,

    /// closed | literal | envelope | exact | per-period
    #[arg(long, default_value = "literal")]
    pub method: LimitMethod,
}

#[derive(Debug, Args)]
pub struct DepthArgs {
    pub path: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerdictArgs {
    pub path: PathBuf,

    #[command(flatten)]
    pub limit: LimitArgs,

    /// Rabi periods consumed by one gate.
    #[arg(long, default_value_t = 1.0)]
    pub periods_per_gate: f64,
}

//! Drive pulses and the mean photon number of their coherent state.

use crate::error::{positive, Result};

/// Planck constant in J·s (exact SI value).
pub const PLANCK_CONSTANT: f64 = 6.626_070_15e-34;

/// Speed of light in vacuum in m/s (exact SI value).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Physical description of a coherent drive pulse.
///
/// The photon energy defaults to `h·ν`. An explicit override lets callers
/// reproduce hand calculations that round `h·ν` before dividing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentPulse {
    frequency: f64,
    duration: f64,
    peak_power: f64,
    photon_energy_override: Option<f64>,
}

impl CoherentPulse {
    /// `frequency` in Hz, `duration` in seconds, `peak_power` in watts.
    pub fn new(frequency: f64, duration: f64, peak_power: f64) -> Result<Self> {
        Ok(Self {
            frequency: positive("frequency", frequency)?,
            duration: positive("duration", duration)?,
            peak_power: positive("peak_power", peak_power)?,
            photon_energy_override: None,
        })
    }

    /// Builds a pulse from its vacuum wavelength in metres.
    pub fn from_wavelength(wavelength: f64, duration: f64, peak_power: f64) -> Result<Self> {
        let wavelength = positive("wavelength", wavelength)?;
        Self::new(SPEED_OF_LIGHT / wavelength, duration, peak_power)
    }

    /// Replaces `h·ν` by a fixed photon energy in joules.
    pub fn with_photon_energy(mut self, joules: f64) -> Result<Self> {
        self.photon_energy_override = Some(positive("photon_energy", joules)?);
        Ok(self)
    }

    pub fn frequency(&self) -> f64 {
        self.frequency
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    pub fn peak_power(&self) -> f64 {
        self.peak_power
    }

    pub fn photon_energy_override(&self) -> Option<f64> {
        self.photon_energy_override
    }

    /// Energy of one photon in joules.
    pub fn photon_energy(&self) -> f64 {
        self.photon_energy_override.unwrap_or(PLANCK_CONSTANT * self.frequency)
    }

    /// Pulse energy divided by photon energy.
    pub fn nbar(&self) -> f64 {
        self.duration * self.peak_power / self.photon_energy()
    }
}

/// Free-function form of [`CoherentPulse::photon_energy`].
pub fn photon_energy(pulse: &CoherentPulse) -> f64 {
    pulse.photon_energy()
}

/// Free-function form of [`CoherentPulse::nbar`].
pub fn nbar_from_pulse(pulse: &CoherentPulse) -> f64 {
    pulse.nbar()
}

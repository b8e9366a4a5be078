use thiserror::Error;

use crate::circuit::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("coupling scale g is required to convert time to τ = g·t")]
    MissingCoupling,

    /// The exact-peak search found its maximum on the edge of the search bracket.
    #[error("no interior maximum of |W| near peak {peak} (τ = {tau})")]
    Bracketing { peak: u64, tau: f64 },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Checks that `value` is finite and strictly positive.
pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and > 0",
        })
    }
}

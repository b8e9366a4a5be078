use std::io::{self, Write};

use decolimit::{RabiTrace, PLANCK_CONSTANT, SPEED_OF_LIGHT};

pub const CSV_HEADER: &str = "tau,w_exact,w_envelope,gauss_envelope";

/// Positional decimal with 17 significant digits, enough to round-trip any f64.
pub fn decimal(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (16 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn write_trace<W: Write>(mut out: W, trace: &RabiTrace) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for i in 0..trace.len() {
        writeln!(
            out,
            "{},{},{},{}",
            decimal(trace.tau_values[i]),
            decimal(trace.w_exact[i]),
            decimal(trace.w_envelope[i]),
            decimal(trace.gauss_envelope[i]),
        )?;
    }
    out.flush()
}

/// Constants echoed at the top of every report.
pub fn header(tail_tol: f64) -> String {
    format!(
        "# decolimit {}\n# h = {PLANCK_CONSTANT:e} J s\n# c = {SPEED_OF_LIGHT} m/s\n# tail_tol = {tail_tol:e}",
        env!("CARGO_PKG_VERSION")
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_round_trips() {
        for &x in &[
            1.0,
            -0.5,
            0.1,
            1.0 / 3.0,
            2.5e-9,
            -7.123456789012345e-3,
            123456.789,
            0.999_999_999_999_999_9,
        ] {
            let s = decimal(x);
            assert!(!s.contains('e'), "{s}");
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
            let digits = s.trim_start_matches('-').replace('.', "");
            assert!(digits.trim_start_matches('0').len() >= 12, "{s}");
        }
        assert_eq!(decimal(0.0), "0.0");
    }
}

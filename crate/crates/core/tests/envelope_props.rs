use decolimit::{gauss_envelope, periods_in_interval, rabi_angular_frequency, rabi_period, w_envelope};
use proptest::prelude::*;

proptest! {
    #[test]
    fn envelope_decreases_in_tau(t1 in 1e-3f64..5.0, dt in 1e-3f64..1.0, nbar in 0.1f64..1e6) {
        prop_assert!(gauss_envelope(t1 + dt, nbar) < gauss_envelope(t1, nbar));
    }

    #[test]
    fn envelope_decreases_in_nbar(tau in 0.05f64..5.0, nbar in 0.1f64..1e3, factor in 1.5f64..10.0) {
        prop_assert!(gauss_envelope(tau, nbar * factor) < gauss_envelope(tau, nbar));
    }

    #[test]
    fn approximation_stays_under_envelope(tau in 0.0f64..200.0, nbar in 0.0f64..1e9) {
        prop_assert!(w_envelope(tau, nbar).value.abs() <= gauss_envelope(tau, nbar));
    }

    #[test]
    fn whole_periods_count_exactly(nbar in 0.0f64..1e12, k in 1u32..10_000) {
        let p = periods_in_interval(nbar, rabi_period(nbar) * k as f64);
        prop_assert!((p - k as f64).abs() <= 1e-12 * k as f64);
    }

    #[test]
    fn period_times_frequency(nbar in 0.0f64..1e12) {
        let prod = rabi_period(nbar) * rabi_angular_frequency(nbar);
        prop_assert!((prod - std::f64::consts::TAU).abs() <= 4.0 * f64::EPSILON * std::f64::consts::TAU);
    }
}

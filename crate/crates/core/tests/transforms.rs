mod common;

use std::f64::consts::{PI, SQRT_2};

use common::*;
use complex_moments::catalog;
use complex_moments::moments::{moment_sequence, radius_estimate};
use complex_moments::transforms::*;
use complex_moments::{Complex64, Error, MeasureP1};

fn fixtures() -> Vec<(&'static str, MeasureP1)> {
    vec![
        ("cauchy01", catalog::cauchy(0.0, 1.0, 2.0).unwrap()),
        ("cauchy34", catalog::cauchy(3.0, 4.0, 10.0).unwrap()),
        ("example1", catalog::quartic()),
        ("example2", catalog::quartic_ratio()),
        ("example3", catalog::shifted_quartic_ratio(1.0)),
    ]
}

#[test]
fn series_match_numeric_transforms() {
    for (name, mu) in fixtures() {
        let m = moment_sequence(&mu, 40);
        let r = radius_estimate(&m).unwrap().estimate;
        for k in 0..10 {
            let z = Complex64::from_polar(2.2 * r, -PI * (k as f64 + 0.5) / 10.0);
            let s = stieltjes_series(&m, z, SeriesOptions::default()).unwrap();
            let n = stieltjes_numeric(&mu, z).unwrap();
            assert!((s.value - n.value).norm() <= 1e-6, "{name} z={z}");
        }
        for k in 1..=10 {
            let t = 0.2 * k as f64;
            let s = fourier_series(&m, c(t, 0.0)).unwrap();
            let n = fourier_numeric(&mu, t).unwrap();
            assert!((s.value - n.value).norm() <= 1e-6, "{name} t={t}");
        }
    }
}

#[test]
fn cauchy_closed_forms() {
    let mu = catalog::cauchy(3.0, 4.0, 10.0).unwrap();
    for z in [c(1.0, -1.0), c(-20.0, -0.5), c(2.0, 3.0), c(-7.0, 0.1)] {
        let sign = z.im.signum();
        let want = (z - c(3.0, 0.0) + c(0.0, 4.0 * sign)).inv();
        assert!((stieltjes_numeric(&mu, z).unwrap().value - want).norm() < 1e-11, "z={z}");
        let f = reciprocal_f(&mu, z).unwrap().value;
        assert!((f - want.inv()).norm() < 1e-9 * (1.0 + f.norm()), "z={z}");
    }
    for t in [0.1, 0.5, 1.3, -0.4, -2.0] {
        let want = (c(0.0, 3.0 * t) - c(4.0 * f64::abs(t), 0.0)).exp();
        assert!((fourier_numeric(&mu, t).unwrap().value - want).norm() < 1e-10, "t={t}");
    }
}

#[test]
fn quartic_fourier_closed_form() {
    let mu = catalog::quartic();
    for t in [0.25f64, 1.0, 2.0, 3.5] {
        let want = (-t / 2.0).exp() * ((t / 2.0).cos() + (t / 2.0).sin());
        let got = fourier_numeric(&mu, t).unwrap().value;
        assert!((got - c(want, 0.0)).norm() < 1e-10, "t={t}");
    }
}

#[test]
fn continuation_across_the_real_axis() {
    // beyond the support, G̃ from the lower half-plane stays analytic
    let mu = catalog::cauchy(0.0, 1.0, 2.0).unwrap();
    let z = c(5.0, 0.0);
    let g = stieltjes_numeric(&mu, z).unwrap().value;
    assert!((g - (z - c(0.0, 1.0)).inv()).norm() < 1e-12);
    assert!(matches!(stieltjes_numeric(&mu, c(1.5, 0.0)), Err(Error::Pole { .. })));
}

#[test]
fn transforms_at_the_origin() {
    for (name, mu) in fixtures() {
        let f0 = fourier_numeric(&mu, 0.0).unwrap().value;
        assert!((f0 - c(1.0, 0.0)).norm() < 1e-10, "{name}");
        let m = moment_sequence(&mu, 30);
        assert_eq!(fourier_series(&m, c(0.0, 0.0)).unwrap().value, m.values()[0]);
        let small = fourier_numeric(&mu, 1e-6).unwrap().value;
        assert!((small - c(1.0, 0.0)).norm() < 1e-5, "{name}");
    }
}

#[test]
fn example_two_moments_in_series() {
    let m = moment_sequence(&catalog::quartic_ratio(), 30);
    for (n, v) in m.indexed() {
        let want = c(0.0, 1.0).powi(n as i32) * SQRT_2 * ((n as f64 - 1.0) * PI / 4.0).cos();
        // rounding in the compact part scales like R^n, R = 2
        let err = (v - want).norm() / 2f64.powi(n as i32);
        assert!(err < 1e-14, "n={n}: {err:e}");
    }
}

#[test]
fn divergence_guard_and_short_input() {
    let m = moment_sequence(&catalog::quartic_ratio(), 30);
    assert!(matches!(stieltjes_series(&m, c(0.5, -0.5), SeriesOptions::default()), Err(Error::Divergent { .. })));
    let short = moment_sequence(&catalog::quartic_ratio(), 5);
    assert!(matches!(stieltjes_series(&short, c(5.0, -5.0), SeriesOptions::default()), Err(Error::TooShort { .. })));
    assert!(stieltjes_series(&short, c(5.0, -5.0), SeriesOptions { radius: Some(1.0), ..Default::default() }).is_ok());
    assert!(matches!(order_and_type(&short), Err(Error::TooShort { .. })));
}

#[test]
fn growth_of_fixtures() {
    let g = order_and_type(&moment_sequence(&catalog::cauchy(3.0, 4.0, 10.0).unwrap(), 40)).unwrap();
    assert!((0.9..=1.1).contains(&g.order.unwrap()), "{g:?}");
    assert!((4.75..=5.25).contains(&g.exponential_type), "{g:?}");
    let r = radius_estimate(&moment_sequence(&catalog::cauchy(0.0, 1.0, 2.0).unwrap(), 40)).unwrap();
    assert!((0.95..=1.05).contains(&r.estimate), "{r:?}");
    // Example 1: density poles at |x| = 2^(-1/2)
    let r = radius_estimate(&moment_sequence(&catalog::quartic(), 60)).unwrap();
    assert!((r.extrapolated.unwrap() - 0.5f64.sqrt()).abs() < 0.05, "{r:?}");
}

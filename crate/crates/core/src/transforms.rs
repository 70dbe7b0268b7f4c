//! Stieltjes, reciprocal Stieltjes and Fourier transforms, numerically from a
//! measure and as series in its complex moments.
//!
//! The tail part is integrated after the substitution `u = 1/x`, on the
//! semicircle `C_R = {R^-1 e^{iθ} : -π ≤ θ ≤ 0}` where the integrands are
//! smooth:
//!
//! * `G_λ(z) = v ∮_{C_R} u q(u) / (u - v) du`, `v = 1/z`,
//! * `𝓕_λ(t) = ∮_{C_R} e^{it/u} q(u) du` for `t ≥ 0`,
//!
//! with `q(u) = p(1/u)/u² = Σ a_n u^(n-2)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::measure::{LaurentTail, MeasureP1};
use crate::moments::{least_squares, radius_estimate, uniform_radius};
use crate::quadrature::{integrate_adaptive, Integral, Tolerance};
use crate::{ComplexSequence, Error, Result, SequenceKind};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

fn contour_tolerance() -> Tolerance {
    Tolerance { absolute: 1e-14, relative: 1e-13, max_subintervals: 2000 }
}

/// A numerically evaluated transform value and its quadrature error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub error: f64,
}

/// A truncated series value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEvaluation {
    pub value: Complex64,
    /// Bound on the omitted terms, assuming `|m_n| ≤ C ρ^n` persists.
    pub tail_bound: f64,
    pub terms: usize,
}

/// Which half of `C_R` (lower: `θ ∈ [-π, 0]`, upper: its mirror image).
#[derive(Clone, Copy)]
enum HalfCircle {
    Lower,
    Upper,
}

/// `∫ f(u) du` along the chosen half of `C_R`, from `-1/R` to `1/R`.
fn tail_contour<F: Fn(Complex64) -> Complex64>(tail: &LaurentTail, half: HalfCircle, f: F) -> Result<Integral> {
    let rho = 1.0 / tail.cutoff();
    let integrand = |theta: f64| {
        let u = Complex64::from_polar(rho, theta);
        f(u) * I * u
    };
    match half {
        HalfCircle::Lower => integrate_adaptive(integrand, -PI, 0.0, contour_tolerance()),
        HalfCircle::Upper => {
            let r = integrate_adaptive(integrand, 0.0, PI, contour_tolerance())?;
            Ok(Integral { value: -r.value, error: r.error })
        }
    }
}

/// `G_μ(z) = ∫ μ(dx)/(z - x)`.
///
/// In the lower half-plane and for `|z| > R` this is the continuation `G̃`
/// from `ℂ₋`; in the upper half-plane it is `G_μ` itself. Real `z` within
/// `max(R₁, R)` is rejected.
pub fn stieltjes_numeric(measure: &MeasureP1, z: Complex64) -> Result<Evaluation> {
    if z.im == 0.0 && z.re.abs() <= measure.support_radius() {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    let mut value = Complex64::new(0.0, 0.0);
    for (x, w) in measure.compact().weighted_points() {
        value += w / (z - x);
    }
    let tail = measure.tail();
    let mut error = 0.0;
    if !tail.is_zero() {
        let v = z.inv();
        let half = if z.im > 0.0 { HalfCircle::Upper } else { HalfCircle::Lower };
        let r = tail_contour(tail, half, |u| u * tail.inverted(u) / (u - v)).map_err(|e| match e {
            Error::Quadrature { estimate } if !estimate.is_finite() => Error::Pole { re: z.re, im: z.im },
            other => other,
        })?;
        value += v * r.value;
        error = v.norm() * r.error;
    }
    Ok(Evaluation { value, error })
}

/// `F_μ(z) = 1 / G_μ(z)`.
pub fn reciprocal_f(measure: &MeasureP1, z: Complex64) -> Result<Evaluation> {
    let g = stieltjes_numeric(measure, z)?;
    let norm = g.value.norm();
    if !(norm > 1e-300) {
        return Err(Error::ZeroOfTransform { re: z.re, im: z.im });
    }
    Ok(Evaluation { value: g.value.inv(), error: g.error / (norm * norm) })
}

/// `𝓕_μ(t) = ∫ e^{ixt} μ(dx)` for real `t`; negative `t` uses
/// `𝓕_λ(t) = conj(𝓕_λ(-t))` for the tail.
pub fn fourier_numeric(measure: &MeasureP1, t: f64) -> Result<Evaluation> {
    if !t.is_finite() {
        return Err(Error::InvalidArgument("Fourier argument must be finite"));
    }
    let mut value = Complex64::new(0.0, 0.0);
    for (x, w) in measure.compact().weighted_points() {
        value += Complex64::from_polar(w, x * t);
    }
    let tail = measure.tail();
    let mut error = 0.0;
    if !tail.is_zero() {
        let s = t.abs();
        let r = tail_contour(tail, HalfCircle::Lower, |u| (I * s / u).exp() * tail.inverted(u))?;
        value += if t < 0.0 { r.value.conj() } else { r.value };
        error = r.error;
    }
    Ok(Evaluation { value, error })
}

/// Options for [`stieltjes_series`].
#[derive(Debug, Clone, Copy)]
pub struct SeriesOptions {
    /// Relative safety margin over the radius estimate.
    pub margin: f64,
    /// Radius to use in place of [`radius_estimate`].
    pub radius: Option<f64>,
    /// Stop once the bound on the remaining terms drops below this.
    pub tolerance: f64,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        Self { margin: 0.5, radius: None, tolerance: 1e-14 }
    }
}

fn require_moments(seq: &ComplexSequence) -> Result<()> {
    if seq.kind() != SequenceKind::Moments || seq.is_empty() {
        return Err(Error::WrongSequenceKind { expected: "moment" });
    }
    Ok(())
}

/// `G̃(z) = Σ m_n / z^(n+1)`, for `|z|` beyond the radius guard.
pub fn stieltjes_series(moments: &ComplexSequence, z: Complex64, opts: SeriesOptions) -> Result<SeriesEvaluation> {
    require_moments(moments)?;
    let rho = match opts.radius {
        Some(r) => r,
        None => radius_estimate(moments)?.estimate,
    };
    let guard = rho * (1.0 + opts.margin);
    let modulus = z.norm();
    if !(modulus > guard) || modulus == 0.0 {
        return Err(Error::Divergent { modulus, guard });
    }
    let values = moments.values();
    let scale = if rho > 0.0 {
        values.iter().enumerate().map(|(n, v)| v.norm() / libm::pow(rho, n as f64)).fold(0.0, f64::max)
    } else {
        0.0
    };
    let ratio = rho / modulus;
    let w = z.inv();
    let mut power = w;
    let mut value = Complex64::new(0.0, 0.0);
    let mut tail_bound = f64::INFINITY;
    let mut terms = 0;
    for (n, &m) in values.iter().enumerate() {
        value += m * power;
        power *= w;
        terms = n + 1;
        // Σ_{k>n} C ρ^k / |z|^(k+1)
        tail_bound = scale * libm::pow(ratio, (n + 1) as f64) / (modulus * (1.0 - ratio));
        if tail_bound < opts.tolerance {
            break;
        }
    }
    Ok(SeriesEvaluation { value, tail_bound, terms })
}

/// `𝓕̃(z) = Σ m_n (iz)^n / n!`, an entire function of `z`.
pub fn fourier_series(moments: &ComplexSequence, z: Complex64) -> Result<SeriesEvaluation> {
    require_moments(moments)?;
    let values = moments.values();
    let rho = uniform_radius(moments);
    let x = rho * z.norm();
    let iz = I * z;
    let mut term_power = Complex64::new(1.0, 0.0);
    let mut value = Complex64::new(0.0, 0.0);
    // (ρ|z|)^(n+1)/(n+1)!
    let mut next_bound = x;
    let mut tail_bound = f64::INFINITY;
    let mut terms = 0;
    for (n, &m) in values.iter().enumerate() {
        value += m * term_power;
        term_power *= iz / (n + 1) as f64;
        terms = n + 1;
        tail_bound = next_bound * libm::exp(x);
        next_bound *= x / (n + 2) as f64;
        if tail_bound < 1e-14 {
            break;
        }
    }
    Ok(SeriesEvaluation { value, tail_bound, terms })
}

/// Order and exponential type of `𝓕̃_μ` estimated from its coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthEstimate {
    /// `None` when every moment beyond index 0 vanishes.
    pub order: Option<f64>,
    /// `lim sup |m_n|^(1/n)`, the same value [`radius_estimate`] reports.
    pub exponential_type: f64,
    pub window: (usize, usize),
    pub degenerate: bool,
}

pub const MIN_GROWTH_ENTRIES: usize = 20;

/// Order from the decay of `a_n = c_n / n!`, `c_n = i^n m_n`.
///
/// For order `ρ` and type `σ`, `log(1/|a_n|)/n ≈ (log n!)/(ρ n) - log σ`:
/// a line in `log(n!)/n` with slope `1/ρ`. The slope is fitted over the
/// upper envelope of the top half of the indices (entries with
/// `|m_n|^(1/n) ≥ 0.75 σ`), which skips vanishing moments.
pub fn order_and_type(moments: &ComplexSequence) -> Result<GrowthEstimate> {
    require_moments(moments)?;
    if moments.len() < MIN_GROWTH_ENTRIES {
        return Err(Error::TooShort { available: moments.len(), required: MIN_GROWTH_ENTRIES });
    }
    let radius = radius_estimate(moments)?;
    let exponential_type = radius.estimate;
    if radius.degenerate {
        return Ok(GrowthEstimate { order: None, exponential_type: 0.0, window: radius.window, degenerate: true });
    }
    let mut log_factorial = 0.0;
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for (n, v) in moments.values().iter().enumerate() {
        if n > 0 {
            log_factorial += libm::log(n as f64);
        }
        if n < radius.window.0 || n > radius.window.1 {
            continue;
        }
        let modulus = v.norm();
        if modulus == 0.0 || libm::pow(modulus, 1.0 / n as f64) < 0.75 * exponential_type {
            continue;
        }
        let decay = log_factorial - libm::log(modulus);
        pts.push((log_factorial / n as f64, decay / n as f64));
    }
    let order = least_squares(&pts).and_then(|(slope, _)| (slope > 0.0).then(|| 1.0 / slope));
    Ok(GrowthEstimate { order, exponential_type, window: radius.window, degenerate: false })
}

//! Complex moments `m_n(μ) = m_n(ν) + ∫_{γ_R} z^n p(z) dz`, where `γ_R` is
//! the upper semicircle of radius `R` traversed counterclockwise.
//!
//! The contour integral is evaluated term by term in closed form; numeric
//! contour quadrature is kept for tests only.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::measure::{CompactPart, LaurentTail, MeasureP1};
use crate::{ComplexSequence, Error, Result, SequenceKind};

/// `∫_{γ_R} z^power dz`: `iπ` for `power = -1`, otherwise
/// `R^(power+1) ((-1)^(power+1) - 1) / (power + 1)`.
pub fn semicircle_power_integral(power: i64, radius: f64) -> Complex64 {
    if power == -1 {
        return Complex64::new(0.0, PI);
    }
    let e = power + 1;
    if e % 2 == 0 {
        return Complex64::new(0.0, 0.0);
    }
    // odd exponent: (-1)^e - 1 = -2
    Complex64::new(-2.0 * libm::pow(radius, e as f64) / e as f64, 0.0)
}

/// Neumaier's compensated sum. Moment sums of wide measures cancel heavily
/// (terms near `R^n` for a result near `|m_n|`), so plain summation loses
/// digits that the cumulant formulae amplify further.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let s = self.sum + x;
        self.carry += if self.sum.abs() >= x.abs() { (self.sum - s) + x } else { (x - s) + self.sum };
        self.sum = s;
    }

    pub(crate) fn value(self) -> f64 {
        self.sum + self.carry
    }
}

/// `m_n(λ) = Σ_k a_k ∫_{γ_R} z^(n-k) dz`.
pub fn tail_moment(tail: &LaurentTail, n: u32) -> Complex64 {
    let r = tail.cutoff();
    let (mut re, mut im) = (CompensatedSum::default(), CompensatedSum::default());
    for &(k, a) in tail.coefficients() {
        let t = semicircle_power_integral(n as i64 - k as i64, r) * a;
        re.add(t.re);
        im.add(t.im);
    }
    Complex64::new(re.value(), im.value())
}

/// Ordinary moment of the compact part (real).
pub fn compact_moment(compact: &CompactPart, n: u32) -> Complex64 {
    let mut s = CompensatedSum::default();
    for (x, w) in compact.weighted_points() {
        s.add(w * powu(x, n));
    }
    Complex64::new(s.value(), 0.0)
}

fn powu(x: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    let mut base = x;
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

pub fn moment(measure: &MeasureP1, n: u32) -> Complex64 {
    compact_moment(measure.compact(), n) + tail_moment(measure.tail(), n)
}

/// `m_0, …, m_{n_max}`.
pub fn moment_sequence(measure: &MeasureP1, n_max: usize) -> ComplexSequence {
    let mut compact = alloc::vec![CompensatedSum::default(); n_max + 1];
    for (x, w) in measure.compact().weighted_points() {
        let mut p = w;
        for slot in compact.iter_mut() {
            slot.add(p);
            p *= x;
        }
    }
    let values = compact
        .into_iter()
        .enumerate()
        .map(|(n, c)| Complex64::new(c.value(), 0.0) + tail_moment(measure.tail(), n as u32))
        .collect();
    ComplexSequence::moments(values)
}

/// Estimate of `R_μ = lim sup |m_n|^(1/n)` with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusEstimate {
    /// `max |m_n|^(1/n)` over the window.
    pub estimate: f64,
    /// Intercept of the fit `log|m_n|/n = log R + c/n` over the window, which
    /// removes the leading `C^(1/n)` bias of the plain estimate.
    pub extrapolated: Option<f64>,
    /// Inclusive index window used.
    pub window: (usize, usize),
    /// Every moment beyond index 0 vanishes (`R = 0`).
    pub degenerate: bool,
}

pub const MIN_RADIUS_ENTRIES: usize = 10;

/// Lim-sup estimate from the top half of the available indices.
pub fn radius_estimate(seq: &ComplexSequence) -> Result<RadiusEstimate> {
    if seq.kind() != SequenceKind::Moments {
        return Err(Error::WrongSequenceKind { expected: "moment" });
    }
    if seq.len() < MIN_RADIUS_ENTRIES {
        return Err(Error::TooShort { available: seq.len(), required: MIN_RADIUS_ENTRIES });
    }
    let n_max = seq.len() - 1;
    let lo = n_max.div_ceil(2).max(1);
    let window = (lo, n_max);
    if seq.values()[1..].iter().all(|v| v.norm() == 0.0) {
        return Ok(RadiusEstimate { estimate: 0.0, extrapolated: Some(0.0), window, degenerate: true });
    }
    let roots: Vec<(usize, f64)> = (lo..=n_max)
        .map(|n| (n, libm::pow(seq.values()[n].norm(), 1.0 / n as f64)))
        .collect();
    let estimate = roots.iter().map(|r| r.1).fold(0.0, f64::max);
    Ok(RadiusEstimate { estimate, extrapolated: extrapolate(&roots, estimate), window, degenerate: false })
}

/// `max_{n≥1} |m_n|^(1/n)` over the available entries: the smallest `R` with
/// `|m_n| ≤ R^n` for every listed `n`.
pub fn uniform_radius(seq: &ComplexSequence) -> f64 {
    seq.indexed()
        .filter(|&(n, _)| n > 0)
        .map(|(n, v)| libm::pow(v.norm(), 1.0 / n as f64))
        .fold(0.0, f64::max)
}

/// Fits `log|m_n|/n` against `1/n` on the upper envelope of the window.
fn extrapolate(roots: &[(usize, f64)], estimate: f64) -> Option<f64> {
    if estimate == 0.0 {
        return Some(0.0);
    }
    let pts: Vec<(f64, f64)> = roots
        .iter()
        .filter(|&&(_, r)| r >= 0.75 * estimate)
        .map(|&(n, r)| (1.0 / n as f64, libm::log(r)))
        .collect();
    let (_, intercept) = least_squares(&pts)?;
    Some(libm::exp(intercept))
}

/// Slope and intercept of the least-squares line; `None` when fewer than two
/// distinct abscissae.
pub(crate) fn least_squares(pts: &[(f64, f64)]) -> Option<(f64, f64)> {
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if sxx <= 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    Some((slope, my - slope * mx))
}

//! Central limits under the four convolutions: `D_{1/N} μ^{□N}` tends to the
//! Cauchy-type atom `δ_{a+ib}`, the Cauchy law `μ_{a,b}`, where `a + ib = m_1(μ)`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::convolution::{convolution_power, dilate_moments, MAX_CONVOLUTION_ORDER};
use crate::cumulants::CumulantKind;
use crate::measure::MeasureP1;
use crate::moments::{moment, radius_estimate};
use crate::transforms::{fourier_numeric, stieltjes_series, SeriesOptions};
use crate::{ComplexSequence, Error, Result};

/// The limit `μ_{a,b}` identified from `m_1 = a + ib`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CauchyTarget {
    pub location: f64,
    pub scale: f64,
    /// `b = 0`: the limit is the atom `δ_a`.
    pub degenerate: bool,
}

impl CauchyTarget {
    /// `a + ib`, the point whose powers are the moments of `μ_{a,b}`.
    pub fn point(&self) -> Complex64 {
        Complex64::new(self.location, self.scale)
    }
}

const SCALE_TOLERANCE: f64 = 1e-9;

/// Requires `Im m_1 ≥ 0` up to a `1e-9` tolerance.
pub fn cauchy_target(m1: Complex64) -> Result<CauchyTarget> {
    if !(m1.re.is_finite() && m1.im.is_finite()) {
        return Err(Error::InvalidArgument("first moment must be finite"));
    }
    if m1.im < -SCALE_TOLERANCE {
        return Err(Error::NegativeImaginaryPart { im: m1.im });
    }
    let scale = m1.im.max(0.0);
    Ok(CauchyTarget { location: m1.re, scale, degenerate: scale <= SCALE_TOLERANCE })
}

/// One point of a limit trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryPoint {
    pub n_fold: u64,
    pub moments: ComplexSequence,
    /// `max_{1≤n≤n_max} |m_n(μ_N) - (a+ib)^n|`.
    pub deviation: f64,
}

fn scaled_power(kind: CumulantKind, m: &ComplexSequence, n_fold: u64, n_max: usize) -> Result<ComplexSequence> {
    if n_fold == 0 {
        return Err(Error::InvalidArgument("N must be at least 1"));
    }
    convolution_power(kind, &dilate_moments(1.0 / n_fold as f64, m), n_fold, n_max)
}

/// Moments of `μ_N = D_{1/N} μ^{□N}` for each `N` in `n_list`.
pub fn limit_trajectory(
    kind: CumulantKind,
    m: &ComplexSequence,
    n_list: &[u64],
    n_max: usize,
) -> Result<(CauchyTarget, Vec<TrajectoryPoint>)> {
    let m1 = m.get(1).ok_or(Error::TooShort { available: m.len(), required: 2 })?;
    let target = cauchy_target(m1)?;
    let c = target.point();
    let mut out = Vec::with_capacity(n_list.len());
    for &n_fold in n_list {
        let moments = scaled_power(kind, m, n_fold, n_max)?;
        let mut power = Complex64::new(1.0, 0.0);
        let mut deviation: f64 = 0.0;
        for (n, v) in moments.indexed() {
            if n > 0 {
                deviation = deviation.max((v - power).norm());
            }
            power *= c;
        }
        out.push(TrajectoryPoint { n_fold, moments, deviation });
    }
    Ok((target, out))
}

/// Largest error over a sample set for one `N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergencePoint {
    pub n_fold: u64,
    pub sup_error: f64,
}

/// `sup_z |G̃_{μ_N}(z) - 1/(z - (a+ib))|`, with `G̃_{μ_N}` summed from the
/// moments up to order `min(n_max, 10)`.
///
/// Every sample must satisfy `|z| ≥ 2 R̂_μ`; since `R_{μ_N} ≤ R_μ` the series
/// then converges for every `N`.
pub fn stieltjes_convergence_check(
    kind: CumulantKind,
    m: &ComplexSequence,
    n_list: &[u64],
    samples: &[Complex64],
) -> Result<Vec<ConvergencePoint>> {
    let radius = radius_estimate(m)?.estimate;
    let guard = 2.0 * radius;
    if let Some(z) = samples.iter().find(|z| z.norm() < guard * (1.0 - 1e-12)) {
        return Err(Error::Divergent { modulus: z.norm(), guard });
    }
    let target = cauchy_target(m.get(1).unwrap_or_default())?;
    let c = target.point();
    let n_max = m.n_max().unwrap_or(0).min(MAX_CONVOLUTION_ORDER);
    let opts = SeriesOptions { radius: Some(radius), ..SeriesOptions::default() };
    let mut out = Vec::with_capacity(n_list.len());
    for &n_fold in n_list {
        let mn = scaled_power(kind, m, n_fold, n_max)?;
        let mut sup_error: f64 = 0.0;
        for &z in samples {
            let g = stieltjes_series(&mn, z, opts)?;
            sup_error = sup_error.max((g.value - (z - c).inv()).norm());
        }
        out.push(ConvergencePoint { n_fold, sup_error });
    }
    Ok(out)
}

/// `sup_t |𝓕_μ(t/N)^N - e^{i(a+ib)t}|` over positive `t`, which is the tensor
/// limit computed from the measure directly.
pub fn fourier_convergence_check(measure: &MeasureP1, n_list: &[u64], samples: &[f64]) -> Result<Vec<ConvergencePoint>> {
    if samples.iter().any(|&t| !(t > 0.0) || !t.is_finite()) {
        return Err(Error::InvalidArgument("Fourier samples must be positive"));
    }
    let target = cauchy_target(moment(measure, 1))?;
    let i_c = Complex64::new(0.0, 1.0) * target.point();
    let mut out = Vec::with_capacity(n_list.len());
    for &n_fold in n_list {
        if n_fold == 0 {
            return Err(Error::InvalidArgument("N must be at least 1"));
        }
        let mut sup_error: f64 = 0.0;
        for &t in samples {
            let f = fourier_numeric(measure, t / n_fold as f64)?.value;
            let got = if n_fold <= i32::MAX as u64 { f.powi(n_fold as i32) } else { f.powf(n_fold as f64) };
            sup_error = sup_error.max((got - (i_c * t).exp()).norm());
        }
        out.push(ConvergencePoint { n_fold, sup_error });
    }
    Ok(out)
}

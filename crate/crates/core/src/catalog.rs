//! Ready-made measures with known complex moments.
//!
//! Every measure here is split as "density restricted to `[-R, R]`" (tabulated
//! on a uniform grid) plus "Laurent tail on `|x| ≥ R`".

use alloc::vec::Vec;
use core::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::measure::{Atom, CompactPart, DensityTable, LaurentTail, MeasureP1, QuadratureRule};
use crate::{Error, Result};

/// Grid intervals used for the tabulated compact part.
pub const DEFAULT_INTERVALS: usize = 400;

/// Highest Laurent index needed so that `(radius/cutoff)^n` drops below 1e-20.
fn truncation_index(radius: f64, cutoff: f64) -> u32 {
    if radius <= 0.0 {
        return 8;
    }
    let ratio = radius / cutoff;
    let k = libm::ceil(libm::log(1e-20) / libm::log(ratio)) as i64 + 2;
    k.clamp(8, 400) as u32
}

/// Tabulates `density` on `[-cutoff, cutoff]` and attaches `tail`.
pub fn split_density<F: Fn(f64) -> f64>(
    density: F,
    tail: LaurentTail,
    atoms: Vec<Atom>,
    intervals: usize,
) -> Result<MeasureP1> {
    let r = tail.cutoff();
    let table = DensityTable::sample(density, -r, r, intervals, QuadratureRule::default())?;
    Ok(MeasureP1::new(CompactPart::new(atoms, Some(table))?, tail))
}

fn cauchy_density(a: f64, b: f64) -> impl Fn(f64) -> f64 {
    move |x| b / (PI * ((x - a) * (x - a) + b * b))
}

/// Laurent coefficients of the Cauchy density: `b/(π((x-a)²+b²)) =
/// Im(1/(x-c))/π = Σ_{k≥2} Im(c^(k-1))/π · x^-k` with `c = a + ib`.
fn cauchy_coefficients(a: f64, b: f64, max_index: u32) -> impl Iterator<Item = (u32, f64)> {
    let c = Complex64::new(a, b);
    let mut power = c;
    (2..=max_index).filter_map(move |k| {
        let coeff = power.im / PI;
        power *= c;
        (coeff != 0.0).then_some((k, coeff))
    })
}

/// The Cauchy law `μ_{a,b}` split at `cutoff > |a + ib|`.
pub fn cauchy(a: f64, b: f64, cutoff: f64) -> Result<MeasureP1> {
    let modulus = libm::hypot(a, b);
    cauchy_with_terms(a, b, cutoff, truncation_index(modulus, cutoff))
}

/// [`cauchy`] with the tail truncated after index `max_index`.
pub fn cauchy_with_terms(a: f64, b: f64, cutoff: f64, max_index: u32) -> Result<MeasureP1> {
    if !(b > 0.0) {
        return Err(Error::InvalidArgument("Cauchy scale must be positive"));
    }
    let modulus = libm::hypot(a, b);
    if !(cutoff > modulus) {
        return Err(Error::InvalidArgument("cutoff must exceed |a + ib|"));
    }
    let tail = LaurentTail::new(
        cutoff,
        0.5 * (modulus + cutoff),
        cauchy_coefficients(a, b, max_index),
    )?;
    split_density(cauchy_density(a, b), tail, Vec::new(), cauchy_intervals(cutoff, b))
}

/// Grid spacing at most `b/40`: the density has poles at distance `b` from
/// the axis, and the local interpolation error scales like `(h/b)^9`.
fn cauchy_intervals(cutoff: f64, min_scale: f64) -> usize {
    DEFAULT_INTERVALS.max(libm::ceil(80.0 * cutoff / min_scale) as usize)
}

/// Mixture `Σ w_i μ_{a_i,b_i} + Σ atoms`, split at a common cutoff.
pub fn cauchy_mixture(components: &[(f64, f64, f64)], atoms: Vec<Atom>, cutoff: f64) -> Result<MeasureP1> {
    let radius = components.iter().map(|&(_, a, b)| libm::hypot(a, b)).fold(0.0, f64::max);
    if !(cutoff > radius) {
        return Err(Error::InvalidArgument("cutoff must exceed every |a + ib|"));
    }
    if components.iter().any(|&(_, _, b)| !(b > 0.0)) {
        return Err(Error::InvalidArgument("Cauchy scale must be positive"));
    }
    let max_index = truncation_index(radius, cutoff);
    let mut coeffs = alloc::vec![0.0; max_index as usize + 1];
    for &(w, a, b) in components {
        for (k, c) in cauchy_coefficients(a, b, max_index) {
            coeffs[k as usize] += w * c;
        }
    }
    let tail = LaurentTail::new(
        cutoff,
        0.5 * (radius + cutoff),
        coeffs.iter().enumerate().filter(|(_, &c)| c != 0.0).map(|(k, &c)| (k as u32, c)),
    )?;
    let comps: Vec<(f64, f64, f64)> = components.to_vec();
    let density = move |x: f64| comps.iter().map(|&(w, a, b)| w * cauchy_density(a, b)(x)).sum();
    let min_scale = components.iter().map(|c| c.2).fold(f64::INFINITY, f64::min);
    split_density(density, tail, atoms, cauchy_intervals(cutoff, min_scale))
}

/// `2 / (π (1 + 4x⁴))`, whose complex moments are
/// `i^n 2^((1-n)/2) sin((1-n)π/4)`.
pub fn quartic() -> MeasureP1 {
    quartic_with_cutoff(1.5).expect("fixed parameters are valid")
}

/// [`quartic`] split at `cutoff > 2^(-1/2)`.
pub fn quartic_with_cutoff(cutoff: f64) -> Result<MeasureP1> {
    let radius = core::f64::consts::FRAC_1_SQRT_2;
    if !(cutoff > radius) {
        return Err(Error::InvalidArgument("cutoff must exceed 2^(-1/2)"));
    }
    // 2/(π(1+4x⁴)) = (1/(2π)) Σ_k (-1/4)^k x^-(4k+4)
    let max_index = truncation_index(radius, cutoff);
    let coeffs = (0..)
        .map(|k: u32| (4 * k + 4, libm::pow(-0.25, k as f64) / (2.0 * PI)))
        .take_while(|&(n, _)| n <= max_index);
    let tail = LaurentTail::new(cutoff, 0.5 * (radius + cutoff), coeffs)?;
    split_density(|x| 2.0 / (PI * (1.0 + 4.0 * x * x * x * x)), tail, Vec::new(), DEFAULT_INTERVALS)
}

/// `√2 x² / (π (1 + x⁴))`, with `m_n = √2 i^n cos((n-1)π/4)`.
pub fn quartic_ratio() -> MeasureP1 {
    shifted_quartic_ratio(0.0)
}

/// `√2 (x-a)² / (π (1 + (x-a)⁴))`, the tensor convolution of
/// [`quartic_ratio`] with `δ_a`. Split at `|a| + 2`.
pub fn shifted_quartic_ratio(shift: f64) -> MeasureP1 {
    shifted_quartic_ratio_with_cutoff(shift, shift.abs() + 2.0).expect("cutoff exceeds |a| + 1")
}

pub fn shifted_quartic_ratio_with_cutoff(shift: f64, cutoff: f64) -> Result<MeasureP1> {
    let radius = shift.abs() + 1.0;
    if !(cutoff > radius) {
        return Err(Error::InvalidArgument("cutoff must exceed |a| + 1"));
    }
    let max_index = truncation_index(radius, cutoff) as usize;
    // Unshifted: √2 y²/(π(1+y⁴)) = (√2/π) Σ_k (-1)^k y^-(4k+2).
    // (x-a)^-m = Σ_j C(m+j-1, j) a^j x^-(m+j), so the x^-n coefficient is
    // Σ_m b_m C(n-1, m-1) a^(n-m).
    let base = |m: usize| -> f64 {
        if m % 4 == 2 {
            let k = (m - 2) / 4;
            if k.is_multiple_of(2) { SQRT_2 / PI } else { -SQRT_2 / PI }
        } else {
            0.0
        }
    };
    let mut coeffs = Vec::new();
    // binom[j] holds C(n-1, j) for the current n.
    let mut binom: Vec<f64> = alloc::vec![1.0];
    for n in 2..=max_index {
        let mut next = alloc::vec![1.0; n];
        for j in 1..n - 1 {
            next[j] = binom[j - 1] + binom[j];
        }
        binom = next;
        let mut c = 0.0;
        for m in 2..=n {
            let b = base(m);
            if b != 0.0 {
                c += b * binom[m - 1] * libm::pow(shift, (n - m) as f64);
            }
        }
        if c != 0.0 {
            coeffs.push((n as u32, c));
        }
    }
    let tail = LaurentTail::new(cutoff, 0.5 * (radius + cutoff), coeffs)?;
    let density = move |x: f64| {
        let y = x - shift;
        let y2 = y * y;
        SQRT_2 * y2 / (PI * (1.0 + y2 * y2))
    };
    split_density(density, tail, Vec::new(), DEFAULT_INTERVALS)
}

/// `δ_a` with an empty tail.
pub fn point_mass(location: f64) -> MeasureP1 {
    let compact = CompactPart::new(alloc::vec![Atom { location, weight: 1.0 }], None)
        .expect("finite atom");
    MeasureP1::new(compact, LaurentTail::zero(location.abs() + 1.0))
}

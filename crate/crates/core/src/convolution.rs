//! Tensor, free, Boolean and monotone convolution at the level of moment
//! sequences, plus dilation and convolution powers.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::cumulants::{check_moments, CumulantKind, MomentCumulantTable, MAX_CUMULANT_ORDER};
use crate::{ComplexSequence, Error, Result, SequenceKind};

/// Largest order accepted by [`convolve_moments`] and [`convolution_power`].
pub const MAX_CONVOLUTION_ORDER: usize = MAX_CUMULANT_ORDER;

/// Moments (or cumulants) of `D_c μ`: entry `n` times `c^n`.
pub fn dilate_moments(c: f64, seq: &ComplexSequence) -> ComplexSequence {
    let values: Vec<Complex64> = seq.indexed().map(|(n, v)| v * powu(c, n)).collect();
    match seq.kind() {
        SequenceKind::Moments => ComplexSequence::moments(values),
        SequenceKind::Cumulants(k) => ComplexSequence::cumulants(k, values),
    }
}

fn powu(c: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |acc, _| acc * c)
}

fn check_order(n_max: usize) -> Result<()> {
    if n_max > MAX_CONVOLUTION_ORDER {
        return Err(Error::SizeLimit { requested: n_max, limit: MAX_CONVOLUTION_ORDER });
    }
    Ok(())
}

/// Moments of `ρ □ σ` up to `n_max`.
///
/// * tensor: `m_n = Σ_k C(n,k) m_k(ρ) m_{n-k}(σ)`;
/// * free and Boolean: add cumulants, convert back;
/// * monotone: `m_n = Σ_k m_k(ρ) Σ_{j_0+…+j_k = n-k} m_{j_0}(σ)⋯m_{j_k}(σ)`.
pub fn convolve_moments(
    kind: CumulantKind,
    rho: &ComplexSequence,
    sigma: &ComplexSequence,
    n_max: usize,
) -> Result<ComplexSequence> {
    check_order(n_max)?;
    check_moments(rho, n_max)?;
    check_moments(sigma, n_max)?;
    let a = &rho.values()[..=n_max];
    let b = &sigma.values()[..=n_max];
    let values = match kind {
        CumulantKind::Tensor => binomial_convolution(a, b),
        CumulantKind::Monotone => monotone_composition(a, b),
        CumulantKind::Free | CumulantKind::Boolean => {
            let table = MomentCumulantTable::new(kind, n_max)?;
            let ka = table.to_cumulants(a);
            let kb = table.to_cumulants(b);
            let sum: Vec<Complex64> = ka.iter().zip(&kb).map(|(x, y)| x + y).collect();
            table.to_moments(&sum)
        }
    };
    Ok(ComplexSequence::moments(values))
}

fn binomial_convolution(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let n_max = a.len() - 1;
    let mut row = alloc::vec![1.0f64];
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > 0 {
            let mut next = alloc::vec![1.0; n + 1];
            for k in 1..n {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
        }
        out.push((0..=n).map(|k| a[k] * b[n - k] * row[k]).sum());
    }
    out
}

/// The inner composition sum is the coefficient of `x^(n-k)` in
/// `M_σ(x)^(k+1)`, `M_σ(x) = Σ_j m_j(σ) x^j`, so the powers of the
/// truncated series are built once.
fn monotone_composition(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let len = a.len();
    let mut out = alloc::vec![Complex64::new(0.0, 0.0); len];
    // power = M_σ^(k+1), truncated to degree n_max
    let mut power: Vec<Complex64> = b.to_vec();
    for k in 0..len {
        for n in k..len {
            out[n] += a[k] * power[n - k];
        }
        power = truncated_product(&power, b);
    }
    out
}

fn truncated_product(p: &[Complex64], q: &[Complex64]) -> Vec<Complex64> {
    let len = p.len();
    (0..len).map(|n| (0..=n).map(|i| p[i] * q[n - i]).sum()).collect()
}

/// Moments of `μ^{□N}`. `N = 0` is `δ_0`; tensor, free and Boolean powers
/// scale the cumulants by `N`; monotone powers iterate `μ ▷ (μ ▷ ⋯)`.
pub fn convolution_power(kind: CumulantKind, m: &ComplexSequence, n_fold: u64, n_max: usize) -> Result<ComplexSequence> {
    check_order(n_max)?;
    check_moments(m, n_max)?;
    let m = m.truncated(n_max);
    if n_fold == 0 {
        return Ok(ComplexSequence::point_mass(Complex64::new(0.0, 0.0), n_max));
    }
    match kind {
        CumulantKind::Monotone => iterated_power(kind, &m, n_fold, n_max),
        _ => {
            let table = MomentCumulantTable::new(kind, n_max)?;
            let k: Vec<Complex64> = table.to_cumulants(m.values()).iter().map(|v| v * n_fold as f64).collect();
            Ok(ComplexSequence::moments(table.to_moments(&k)))
        }
    }
}

/// `μ^{□N}` by `N - 1` left multiplications `μ □ μ^{□(N-1)}`, for any kind.
pub fn iterated_power(kind: CumulantKind, m: &ComplexSequence, n_fold: u64, n_max: usize) -> Result<ComplexSequence> {
    check_order(n_max)?;
    check_moments(m, n_max)?;
    let m = m.truncated(n_max);
    if n_fold == 0 {
        return Ok(ComplexSequence::point_mass(Complex64::new(0.0, 0.0), n_max));
    }
    let mut acc = m.clone();
    for _ in 1..n_fold {
        acc = convolve_moments(kind, &m, &acc, n_max)?;
    }
    Ok(acc)
}

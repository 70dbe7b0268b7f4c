//! Complex cumulants of the four species.
//!
//! Each moment–cumulant formula `m_n = Σ_π w(π) K_π` is collapsed to a sum
//! over block-size types, and inverted by forward substitution: the
//! one-block partition contributes `K_n` with weight 1 in every family.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_complex::Complex64;

use crate::convolution;
use crate::partitions::{enumerate_interval, enumerate_noncrossing, enumerate_partitions};
use crate::{ComplexSequence, Error, Result, SequenceKind};

/// Largest order handled by the moment–cumulant tables.
pub const MAX_CUMULANT_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CumulantKind {
    Tensor,
    Free,
    Boolean,
    Monotone,
}

impl CumulantKind {
    pub const ALL: [CumulantKind; 4] =
        [CumulantKind::Tensor, CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone];

    pub fn name(self) -> &'static str {
        match self {
            CumulantKind::Tensor => "tensor",
            CumulantKind::Free => "free",
            CumulantKind::Boolean => "boolean",
            CumulantKind::Monotone => "monotone",
        }
    }
}

impl fmt::Display for CumulantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CumulantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CumulantKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or(Error::InvalidArgument("kind must be tensor, free, boolean or monotone"))
    }
}

/// One row of the moment–cumulant table: `weight · Π K_{sizes[i]}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub sizes: Vec<usize>,
    pub weight: f64,
}

/// `m_n = Σ_terms weight · Π K_size` for `n = 1..=n_max`, terms grouped by
/// block-size type.
#[derive(Debug, Clone)]
pub struct MomentCumulantTable {
    kind: CumulantKind,
    rows: Vec<Vec<Term>>,
}

impl MomentCumulantTable {
    pub fn new(kind: CumulantKind, n_max: usize) -> Result<Self> {
        if n_max > MAX_CUMULANT_ORDER {
            return Err(Error::SizeLimit { requested: n_max, limit: MAX_CUMULANT_ORDER });
        }
        let mut rows = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let family = match kind {
                CumulantKind::Tensor => enumerate_partitions(n)?,
                CumulantKind::Free | CumulantKind::Monotone => enumerate_noncrossing(n)?,
                CumulantKind::Boolean => enumerate_interval(n)?,
            };
            let mut grouped: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
            for p in &family {
                let w = match kind {
                    CumulantKind::Monotone => p.monotone_weight(),
                    _ => 1.0,
                };
                *grouped.entry(p.block_sizes()).or_insert(0.0) += w;
            }
            rows.push(grouped.into_iter().map(|(sizes, weight)| Term { sizes, weight }).collect());
        }
        Ok(Self { kind, rows })
    }

    pub fn kind(&self) -> CumulantKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// Terms of the formula for `m_n`.
    pub fn terms(&self, n: usize) -> &[Term] {
        &self.rows[n - 1]
    }

    /// `K_1..K_{n_max}` (as a slice, 0-based) to `m_0..m_{n_max}`.
    pub fn to_moments(&self, k: &[Complex64]) -> Vec<Complex64> {
        let mut m = Vec::with_capacity(self.rows.len() + 1);
        m.push(Complex64::new(1.0, 0.0));
        for row in &self.rows {
            m.push(row.iter().map(|t| product(t, k) * t.weight).sum());
        }
        m
    }

    /// `m_0..m_{n_max}` to `K_1..K_{n_max}`.
    pub fn to_cumulants(&self, m: &[Complex64]) -> Vec<Complex64> {
        let mut k: Vec<Complex64> = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let n = i + 1;
            // every term other than the single block only uses K_j, j < n
            let lower: Complex64 = row
                .iter()
                .filter(|t| t.sizes.len() > 1)
                .map(|t| product(t, &k) * t.weight)
                .sum();
            k.push(m[n] - lower);
        }
        k
    }
}

fn product(term: &Term, k: &[Complex64]) -> Complex64 {
    term.sizes.iter().fold(Complex64::new(1.0, 0.0), |acc, &s| acc * k[s - 1])
}

fn require_length(seq: &ComplexSequence, n_max: usize) -> Result<()> {
    let have = seq.n_max().unwrap_or(0);
    if seq.is_empty() || have < n_max {
        return Err(Error::TooShort {
            available: seq.len(),
            required: n_max + 1 - seq.first_index(),
        });
    }
    Ok(())
}

/// `m_n = Σ_{π ∈ family} K_π`, with monotone partitions weighted by `1/|π|!`.
pub fn cumulants_to_moments(kind: CumulantKind, k: &ComplexSequence, n_max: usize) -> Result<ComplexSequence> {
    if !matches!(k.kind(), SequenceKind::Cumulants(_)) {
        return Err(Error::WrongSequenceKind { expected: "cumulant" });
    }
    require_length(k, n_max)?;
    let table = MomentCumulantTable::new(kind, n_max)?;
    Ok(ComplexSequence::moments(table.to_moments(&k.values()[..n_max])))
}

pub fn moments_to_cumulants(kind: CumulantKind, m: &ComplexSequence, n_max: usize) -> Result<ComplexSequence> {
    check_moments(m, n_max)?;
    let table = MomentCumulantTable::new(kind, n_max)?;
    Ok(ComplexSequence::cumulants(kind, table.to_cumulants(m.values())))
}

pub(crate) fn check_moments(m: &ComplexSequence, n_max: usize) -> Result<()> {
    if m.kind() != SequenceKind::Moments {
        return Err(Error::WrongSequenceKind { expected: "moment" });
    }
    require_length(m, n_max)?;
    let m0 = m.values()[0];
    if (m0 - Complex64::new(1.0, 0.0)).norm() > 1e-8 {
        return Err(Error::NotNormalized { re: m0.re, im: m0.im });
    }
    Ok(())
}

/// Cumulants as the coefficient of `N` in `m_n(μ^{□N})`.
#[derive(Debug, Clone)]
pub struct Extraction {
    pub cumulants: ComplexSequence,
    /// Largest `|Δ^{n+1} m_n(μ^{□N})|` at `N = 0`: vanishes when
    /// `N ↦ m_n(μ^{□N})` is a polynomial of degree at most `n`.
    pub residual: f64,
}

/// Evaluates `m_n(μ^{□N})` for `N = 0..=n_max + 1` by iterated pairwise
/// convolution, takes forward differences in `N` and reads off the linear
/// coefficient of the interpolating polynomial through `N = 0..=n`:
/// `Σ_{j=1}^{n} (-1)^(j-1) Δ^j y(0) / j`.
pub fn cumulants_by_n_extraction(kind: CumulantKind, m: &ComplexSequence, n_max: usize) -> Result<Extraction> {
    check_moments(m, n_max)?;
    if n_max > MAX_CUMULANT_ORDER {
        return Err(Error::SizeLimit { requested: n_max, limit: MAX_CUMULANT_ORDER });
    }
    let m = m.truncated(n_max);
    let mut powers = Vec::with_capacity(n_max + 2);
    let mut current = ComplexSequence::point_mass(Complex64::new(0.0, 0.0), n_max);
    powers.push(current.clone());
    for _ in 0..=n_max {
        current = convolution::convolve_moments(kind, &m, &current, n_max)?;
        powers.push(current.clone());
    }
    let mut cumulants = Vec::with_capacity(n_max);
    let mut residual: f64 = 0.0;
    for n in 1..=n_max {
        let mut diffs: Vec<Complex64> = powers.iter().map(|p| p.values()[n]).collect();
        let mut linear = Complex64::new(0.0, 0.0);
        for j in 1..=n + 1 {
            for i in 0..diffs.len() - j {
                diffs[i] = diffs[i + 1] - diffs[i];
            }
            if j <= n {
                let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
                linear += diffs[0] * (sign / j as f64);
            } else {
                residual = residual.max(diffs[0].norm());
            }
        }
        cumulants.push(linear);
    }
    Ok(Extraction { cumulants: ComplexSequence::cumulants(kind, cumulants), residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cauchy_cumulants_are_first_order_only() {
        let z = c(3.0, 4.0);
        let m = ComplexSequence::point_mass(z, 8);
        for kind in CumulantKind::ALL {
            let k = moments_to_cumulants(kind, &m, 8).unwrap();
            assert!((k.get(1).unwrap() - z).norm() < 1e-12);
            for n in 2..=8 {
                assert!(k.get(n).unwrap().norm() < 1e-9, "{kind} K_{n}");
            }
            let mut ks = vec![c(0.0, 0.0); 8];
            ks[0] = z;
            let back = cumulants_to_moments(kind, &ComplexSequence::cumulants(kind, ks), 8).unwrap();
            assert!(back.max_abs_diff(&m) < 1e-9);
        }
    }

    #[test]
    fn zero_cumulants_give_point_mass_at_zero() {
        for kind in CumulantKind::ALL {
            let m = cumulants_to_moments(kind, &ComplexSequence::cumulants(kind, vec![c(0.0, 0.0); 5]), 5)
                .unwrap();
            assert_eq!(m.get(0), Some(c(1.0, 0.0)));
            assert!(m.values()[1..].iter().all(|v| v.norm() == 0.0));
        }
    }

    #[test]
    fn gaussian_fourth_moment() {
        let k = ComplexSequence::cumulants(
            CumulantKind::Tensor,
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        );
        let m = cumulants_to_moments(CumulantKind::Tensor, &k, 4).unwrap();
        assert_eq!(m.get(4), Some(c(3.0, 0.0)));
    }

    #[test]
    fn tensor_variance() {
        let m = ComplexSequence::moments(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.5, 0.0)]);
        let k = moments_to_cumulants(CumulantKind::Tensor, &m, 2).unwrap();
        assert_eq!(k.get(2), Some(c(0.5, 0.0)));
    }

    #[test]
    fn semicircle_free_cumulants() {
        // Catalan moments C_k at even orders: the only free cumulant is K_2 = 1
        let m = ComplexSequence::moments(
            [1.0, 0.0, 1.0, 0.0, 2.0, 0.0, 5.0, 0.0, 14.0].iter().map(|&x| c(x, 0.0)).collect(),
        );
        let k = moments_to_cumulants(CumulantKind::Free, &m, 8).unwrap();
        for n in 1..=8 {
            let want = if n == 2 { 1.0 } else { 0.0 };
            assert!((k.get(n).unwrap() - c(want, 0.0)).norm() < 1e-12, "K_{n}");
        }
    }

    #[test]
    fn size_limit_and_normalization() {
        let m = ComplexSequence::point_mass(c(1.0, 0.0), 11);
        assert!(matches!(moments_to_cumulants(CumulantKind::Free, &m, 11), Err(Error::SizeLimit { .. })));
        let bad = ComplexSequence::moments(vec![c(2.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(moments_to_cumulants(CumulantKind::Free, &bad, 1), Err(Error::NotNormalized { .. })));
        let short = ComplexSequence::point_mass(c(1.0, 0.0), 3);
        assert!(matches!(moments_to_cumulants(CumulantKind::Free, &short, 5), Err(Error::TooShort { .. })));
    }

    #[test]
    fn extraction_on_point_mass() {
        let m = ComplexSequence::point_mass(c(1.5, 0.0), 6);
        for kind in CumulantKind::ALL {
            let e = cumulants_by_n_extraction(kind, &m, 6).unwrap();
            assert!((e.cumulants.get(1).unwrap() - c(1.5, 0.0)).norm() < 1e-10);
            for n in 2..=6 {
                assert!(e.cumulants.get(n).unwrap().norm() < 1e-8, "{kind} K_{n}");
            }
            assert!(e.residual < 1e-6);
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("Monotone".parse::<CumulantKind>().unwrap(), CumulantKind::Monotone);
        assert!("classical".parse::<CumulantKind>().is_err());
    }
}

//! Measures `μ = ν + λ` with `ν` compactly supported (atoms plus a tabulated
//! density) and `λ(dx) = p(x) 1_{|x| ≥ R} dx`, `p(x) = Σ_{n≥2} a_n x^-n`.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::quadrature::GaussLegendre;
use crate::{Error, Result};

/// Truncated Laurent density `p(x) = Σ a_n x^-n`, living on `|x| ≥ R`.
///
/// `inner_radius` is the caller's witness `r < R` that the full series
/// converges absolutely for `|x| > r`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentTail {
    coeffs: Vec<(u32, f64)>,
    cutoff: f64,
    inner_radius: f64,
}

impl LaurentTail {
    /// Builds a tail from `(n, a_n)` pairs in any order. Semantic invariants
    /// (indices `≥ 2`, positivity, `r < R`) are left to [`MeasureP1::validate`].
    pub fn new(
        cutoff: f64,
        inner_radius: f64,
        coeffs: impl IntoIterator<Item = (u32, f64)>,
    ) -> Result<Self> {
        if !(cutoff.is_finite() && cutoff > 0.0) {
            return Err(Error::InvalidMeasure("tail cutoff R must be positive and finite"));
        }
        if !(inner_radius.is_finite() && inner_radius > 0.0) {
            return Err(Error::InvalidMeasure("inner radius r must be positive and finite"));
        }
        let mut coeffs: Vec<(u32, f64)> = coeffs.into_iter().collect();
        if coeffs.iter().any(|&(_, a)| !a.is_finite()) {
            return Err(Error::InvalidMeasure("tail coefficients must be finite"));
        }
        coeffs.sort_by_key(|&(n, _)| n);
        if coeffs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidMeasure("duplicate tail coefficient index"));
        }
        Ok(Self { coeffs, cutoff, inner_radius })
    }

    /// The empty tail on `|x| ≥ cutoff`.
    pub fn zero(cutoff: f64) -> Self {
        Self { coeffs: Vec::new(), cutoff, inner_radius: 0.5 * cutoff }
    }

    /// `(n, a_n)` sorted by `n`.
    pub fn coefficients(&self) -> &[(u32, f64)] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: u32) -> f64 {
        self.coeffs
            .binary_search_by_key(&n, |&(k, _)| k)
            .map(|i| self.coeffs[i].1)
            .unwrap_or(0.0)
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn inner_radius(&self) -> f64 {
        self.inner_radius
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&(_, a)| a == 0.0)
    }

    /// `p(x)` (the series itself, regardless of the cutoff).
    pub fn series_at(&self, x: f64) -> f64 {
        self.series_complex(Complex64::new(x, 0.0)).re
    }

    /// `Σ |a_n| |x|^-n`, the scale against which rounding in `p(x)` is judged.
    pub fn abs_series_at(&self, x: f64) -> f64 {
        let y = 1.0 / x.abs();
        sparse_powers(&self.coeffs, Complex64::new(y, 0.0), 0, |a| a.abs()).re
    }

    /// `p(z)` for complex `z`.
    pub fn series_complex(&self, z: Complex64) -> Complex64 {
        sparse_powers(&self.coeffs, z.inv(), 0, |a| a)
    }

    /// `p(1/w) / w² = Σ a_n w^(n-2)`, analytic for `|w| < 1/r`.
    pub fn inverted(&self, w: Complex64) -> Complex64 {
        sparse_powers(&self.coeffs, w, 2, |a| a)
    }

    /// `λ(ℝ) = Σ_{n even} 2 a_n R^(1-n) / (n-1)`.
    pub fn mass(&self) -> f64 {
        self.coeffs
            .iter()
            .filter(|&&(n, _)| n % 2 == 0 && n >= 2)
            .map(|&(n, a)| 2.0 * a * libm::pow(self.cutoff, 1.0 - n as f64) / (n as f64 - 1.0))
            .sum()
    }

    /// The same coefficients with a different cutoff.
    pub fn with_cutoff(&self, cutoff: f64) -> Result<Self> {
        Self::new(cutoff, self.inner_radius, self.coeffs.iter().copied())
    }
}

/// `Σ f(a_n) x^(n-shift)` over sorted sparse indices, with incremental powers.
/// Indices below `shift` are handled with negative powers.
fn sparse_powers(
    coeffs: &[(u32, f64)],
    x: Complex64,
    shift: u32,
    f: impl Fn(f64) -> f64,
) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    let mut exponent: i64 = 0;
    for &(n, a) in coeffs {
        let target = n as i64 - shift as i64;
        if target < 0 {
            acc += x.powi(target as i32) * f(a);
            continue;
        }
        while exponent < target {
            power *= x;
            exponent += 1;
        }
        acc += power * f(a);
    }
    acc
}

/// A point mass of the compact part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub location: f64,
    pub weight: f64,
}

/// How a tabulated density is integrated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureRule {
    /// Piecewise Lagrange interpolation of degree 8 through neighboring grid
    /// points, integrated on each grid interval by Gauss–Legendre.
    GaussLegendre { nodes_per_panel: usize },
    /// Linear interpolation and the trapezoid rule on the grid itself.
    Trapezoid,
}

impl Default for QuadratureRule {
    fn default() -> Self {
        QuadratureRule::GaussLegendre { nodes_per_panel: 64 }
    }
}

const INTERPOLATION_POINTS: usize = 9;

/// A density sampled on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityTable {
    grid: Vec<f64>,
    values: Vec<f64>,
    rule: QuadratureRule,
    // (node, weight · density(node)), the integration cache
    weighted_nodes: Vec<(f64, f64)>,
}

impl DensityTable {
    pub fn new(grid: Vec<f64>, values: Vec<f64>, rule: QuadratureRule) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::InvalidMeasure("density grid and values differ in length"));
        }
        if grid.len() < 2 {
            return Err(Error::InvalidMeasure("density grid needs at least two points"));
        }
        if grid.iter().chain(&values).any(|v| !v.is_finite()) {
            return Err(Error::InvalidMeasure("density table entries must be finite"));
        }
        if grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidMeasure("density grid must be strictly increasing"));
        }
        if let QuadratureRule::GaussLegendre { nodes_per_panel: 0 } = rule {
            return Err(Error::InvalidMeasure("quadrature needs at least one node per panel"));
        }
        let mut table = Self { grid, values, rule, weighted_nodes: Vec::new() };
        table.weighted_nodes = table.build_nodes();
        Ok(table)
    }

    /// Samples `density` on `intervals + 1` equally spaced points of `[lo, hi]`.
    pub fn sample<F: Fn(f64) -> f64>(
        density: F,
        lo: f64,
        hi: f64,
        intervals: usize,
        rule: QuadratureRule,
    ) -> Result<Self> {
        if intervals == 0 || !(hi > lo) {
            return Err(Error::InvalidMeasure("sampling interval must be nonempty"));
        }
        let h = (hi - lo) / intervals as f64;
        let grid: Vec<f64> = (0..=intervals)
            .map(|i| if i == intervals { hi } else { lo + h * i as f64 })
            .collect();
        let values = grid.iter().map(|&x| density(x)).collect();
        Self::new(grid, values, rule)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn rule(&self) -> QuadratureRule {
        self.rule
    }

    pub fn lower(&self) -> f64 {
        self.grid[0]
    }

    pub fn upper(&self) -> f64 {
        self.grid[self.grid.len() - 1]
    }

    /// Quadrature nodes paired with `weight × density`.
    pub fn weighted_nodes(&self) -> &[(f64, f64)] {
        &self.weighted_nodes
    }

    pub fn mass(&self) -> f64 {
        self.weighted_nodes.iter().map(|&(_, w)| w).sum()
    }

    /// Interpolated density; zero outside the grid.
    pub fn value_at(&self, x: f64) -> f64 {
        if x < self.lower() || x > self.upper() {
            return 0.0;
        }
        let i = self.grid.partition_point(|&g| g <= x).saturating_sub(1).min(self.grid.len() - 2);
        match self.rule {
            QuadratureRule::Trapezoid => {
                let (x0, x1) = (self.grid[i], self.grid[i + 1]);
                let t = (x - x0) / (x1 - x0);
                self.values[i] * (1.0 - t) + self.values[i + 1] * t
            }
            QuadratureRule::GaussLegendre { .. } => self.lagrange(i, x),
        }
    }

    fn lagrange(&self, interval: usize, x: f64) -> f64 {
        let len = self.grid.len();
        let p = INTERPOLATION_POINTS.min(len);
        let start = interval.saturating_sub(p / 2 - 1).min(len - p);
        let xs = &self.grid[start..start + p];
        let ys = &self.values[start..start + p];
        if let Some(j) = xs.iter().position(|&g| g == x) {
            return ys[j];
        }
        let mut acc = 0.0;
        for j in 0..p {
            let mut basis = 1.0;
            for k in 0..p {
                if k != j {
                    basis *= (x - xs[k]) / (xs[j] - xs[k]);
                }
            }
            acc += basis * ys[j];
        }
        acc
    }

    fn build_nodes(&self) -> Vec<(f64, f64)> {
        match self.rule {
            QuadratureRule::Trapezoid => {
                let n = self.grid.len();
                (0..n)
                    .map(|i| {
                        let left = if i > 0 { self.grid[i] - self.grid[i - 1] } else { 0.0 };
                        let right = if i + 1 < n { self.grid[i + 1] - self.grid[i] } else { 0.0 };
                        (self.grid[i], 0.5 * (left + right) * self.values[i])
                    })
                    .collect()
            }
            QuadratureRule::GaussLegendre { nodes_per_panel } => {
                let rule = GaussLegendre::new(nodes_per_panel);
                let mut out = Vec::with_capacity(nodes_per_panel * (self.grid.len() - 1));
                for i in 0..self.grid.len() - 1 {
                    for (x, w) in rule.mapped(self.grid[i], self.grid[i + 1]) {
                        out.push((x, w * self.lagrange(i, x)));
                    }
                }
                out
            }
        }
    }
}

/// The compactly supported part `ν`: atoms plus at most one tabulated density.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CompactPart {
    atoms: Vec<Atom>,
    density: Option<DensityTable>,
}

impl CompactPart {
    pub fn new(atoms: Vec<Atom>, density: Option<DensityTable>) -> Result<Self> {
        if atoms.iter().any(|a| !(a.location.is_finite() && a.weight.is_finite())) {
            return Err(Error::InvalidMeasure("atoms must be finite"));
        }
        Ok(Self { atoms, density })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn density(&self) -> Option<&DensityTable> {
        self.density.as_ref()
    }

    /// `R₁`: the smallest symmetric interval `[-R₁, R₁]` holding every atom
    /// and the density grid.
    pub fn support(&self) -> f64 {
        let atoms = self.atoms.iter().map(|a| a.location.abs());
        let grid = self.density.iter().flat_map(|d| [d.lower().abs(), d.upper().abs()]);
        atoms.chain(grid).fold(0.0, f64::max)
    }

    pub fn mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight).sum::<f64>()
            + self.density.as_ref().map_or(0.0, DensityTable::mass)
    }

    /// Atoms and density quadrature nodes as one weighted point cloud.
    pub fn weighted_points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.atoms
            .iter()
            .map(|a| (a.location, a.weight))
            .chain(self.density.iter().flat_map(|d| d.weighted_nodes().iter().copied()))
    }
}

/// A probability measure `ν + λ` with Laurent-analytic tail.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureP1 {
    compact: CompactPart,
    tail: LaurentTail,
}

impl MeasureP1 {
    pub fn new(compact: CompactPart, tail: LaurentTail) -> Self {
        Self { compact, tail }
    }

    pub fn compact(&self) -> &CompactPart {
        &self.compact
    }

    pub fn tail(&self) -> &LaurentTail {
        &self.tail
    }

    pub fn total_mass(&self) -> f64 {
        self.compact.mass() + self.tail.mass()
    }

    /// `max(R₁, R)`.
    pub fn support_radius(&self) -> f64 {
        self.compact.support().max(self.tail.cutoff())
    }

    /// Density of the absolutely continuous part at `x`; both parts
    /// contribute where their supports overlap.
    pub fn density_at(&self, x: f64) -> Result<f64> {
        if let Some(a) = self.compact.atoms.iter().find(|a| a.location == x && a.weight != 0.0) {
            return Err(Error::AtAtom { location: a.location });
        }
        let mut value = self.compact.density.as_ref().map_or(0.0, |d| d.value_at(x));
        if x.abs() >= self.tail.cutoff() {
            value += self.tail.series_at(x);
        }
        Ok(value)
    }

    pub fn validate(&self) -> ValidationReport {
        self.validate_with(&ValidationConfig::default())
    }

    pub fn validate_with(&self, config: &ValidationConfig) -> ValidationReport {
        let mut violations = Vec::new();
        let tail = &self.tail;

        if tail.inner_radius() >= tail.cutoff() {
            violations.push(Violation::RadiusOrdering {
                inner: tail.inner_radius(),
                cutoff: tail.cutoff(),
            });
        }
        for &(n, a) in tail.coefficients() {
            if n < 2 && a != 0.0 {
                violations.push(Violation::IndexBelowTwo { index: n });
            }
        }
        let a2 = tail.coefficient(2);
        if a2 < 0.0 {
            violations.push(Violation::NegativeSecondCoefficient { a2 });
        }
        if let Some(&(index, coefficient)) = tail.coefficients().iter().find(|&&(_, a)| a != 0.0) {
            if coefficient < 0.0 {
                violations.push(Violation::DominantTermNegative { index, coefficient });
            }
        }
        if let Some((x, value)) = positivity_failure(tail, config.grid_points_per_side) {
            violations.push(Violation::NegativeTailDensity { x, value });
        }
        let tail_mass = tail.mass();
        if !tail_mass.is_finite() || tail_mass > 1.0 + config.mass_tolerance {
            violations.push(Violation::TailMassOutOfRange { mass: tail_mass });
        }

        for atom in &self.compact.atoms {
            if atom.weight < 0.0 {
                violations.push(Violation::NegativeAtomWeight {
                    location: atom.location,
                    weight: atom.weight,
                });
            }
        }
        if let Some(d) = &self.compact.density {
            if let Some((&x, &value)) = d.grid.iter().zip(&d.values).find(|(_, &v)| v < 0.0) {
                violations.push(Violation::NegativeDensityValue { x, value });
            }
        }

        let total = self.total_mass();
        if !((total - 1.0).abs() <= config.mass_tolerance) {
            violations.push(Violation::TotalMass { total });
        }
        ValidationReport { violations }
    }
}

/// First grid point on `[R, 10R] ∪ [-10R, -R]` where `p` is negative beyond
/// rounding, using geometric spacing.
fn positivity_failure(tail: &LaurentTail, points: usize) -> Option<(f64, f64)> {
    if tail.is_zero() {
        return None;
    }
    let r = tail.cutoff();
    let points = points.max(2);
    let ratio = libm::pow(10.0, 1.0 / (points - 1) as f64);
    let mut x = r;
    for _ in 0..points {
        for s in [x, -x] {
            let v = tail.series_at(s);
            if v < -1e-14 * tail.abs_series_at(s) {
                return Some((s, v));
            }
        }
        x *= ratio;
    }
    None
}

#[derive(Debug, Clone, Copy)]
pub struct ValidationConfig {
    pub grid_points_per_side: usize,
    pub mass_tolerance: f64,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        Self { grid_points_per_side: 512, mass_tolerance: 1e-8 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Violation {
    RadiusOrdering { inner: f64, cutoff: f64 },
    IndexBelowTwo { index: u32 },
    NegativeSecondCoefficient { a2: f64 },
    DominantTermNegative { index: u32, coefficient: f64 },
    NegativeTailDensity { x: f64, value: f64 },
    TailMassOutOfRange { mass: f64 },
    NegativeAtomWeight { location: f64, weight: f64 },
    NegativeDensityValue { x: f64, value: f64 },
    TotalMass { total: f64 },
}

impl Violation {
    /// Short machine-readable name.
    pub fn name(&self) -> &'static str {
        match self {
            Violation::RadiusOrdering { .. } => "radius-ordering",
            Violation::IndexBelowTwo { .. } => "index-below-two",
            Violation::NegativeSecondCoefficient { .. } => "negative-a2",
            Violation::DominantTermNegative { .. } => "dominant-term-negative",
            Violation::NegativeTailDensity { .. } => "tail-positivity",
            Violation::TailMassOutOfRange { .. } => "tail-mass",
            Violation::NegativeAtomWeight { .. } => "atom-weight",
            Violation::NegativeDensityValue { .. } => "density-positivity",
            Violation::TotalMass { .. } => "total-mass",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::RadiusOrdering { inner, cutoff } => {
                write!(f, "inner radius r = {inner} is not below the cutoff R = {cutoff}")
            }
            Violation::IndexBelowTwo { index } => write!(f, "tail term a_{index} with index below 2"),
            Violation::NegativeSecondCoefficient { a2 } => write!(f, "a_2 = {a2} is negative"),
            Violation::DominantTermNegative { index, coefficient } => {
                write!(f, "leading tail term a_{index} = {coefficient} is negative")
            }
            Violation::NegativeTailDensity { x, value } => {
                write!(f, "tail density p({x}) = {value} is negative")
            }
            Violation::TailMassOutOfRange { mass } => write!(f, "tail mass {mass} exceeds 1"),
            Violation::NegativeAtomWeight { location, weight } => {
                write!(f, "atom at {location} has negative weight {weight}")
            }
            Violation::NegativeDensityValue { x, value } => {
                write!(f, "tabulated density {value} at {x} is negative")
            }
            Violation::TotalMass { total } => write!(f, "total mass {total} differs from 1"),
        }
    }
}

/// Violated invariants; empty when the measure is in the class.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

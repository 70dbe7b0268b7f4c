//! JSON measure files.
//!
//! ```json
//! {
//!   "atoms": [{"x": 0.5, "w": 0.25}],
//!   "compact_density": {"grid": [-2.0, 0.0, 2.0], "values": [0.1, 0.2, 0.1]},
//!   "tail": {"R": 2.0, "r": 1.5, "coeffs": [{"n": 2, "a": 0.3183098861837907}]}
//! }
//! ```
//!
//! `compact_density` may be `null`. Unknown keys are rejected. The density
//! is integrated with the default rule (Gauss–Legendre, 64 nodes per grid
//! interval).

use std::fs;
use std::path::Path;

use complex_moments::{Atom, CompactPart, DensityTable, LaurentTail, MeasureP1, QuadratureRule};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub atoms: Vec<AtomSpec>,
    pub compact_density: Option<DensitySpec>,
    pub tail: TailSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSpec {
    pub x: f64,
    pub w: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensitySpec {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TailSpec {
    #[serde(rename = "R")]
    pub cutoff: f64,
    #[serde(rename = "r")]
    pub inner_radius: f64,
    pub coeffs: Vec<CoeffSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffSpec {
    pub n: u32,
    pub a: f64,
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Structural problems (bad radii, mismatched grid, duplicate indices)
    /// surface here; the class conditions are left to `validate`.
    pub fn to_measure(&self) -> complex_moments::Result<MeasureP1> {
        let atoms = self.atoms.iter().map(|a| Atom { location: a.x, weight: a.w }).collect();
        let density = match &self.compact_density {
            Some(d) => Some(DensityTable::new(d.grid.clone(), d.values.clone(), QuadratureRule::default())?),
            None => None,
        };
        let tail = LaurentTail::new(
            self.tail.cutoff,
            self.tail.inner_radius,
            self.tail.coeffs.iter().map(|c| (c.n, c.a)),
        )?;
        Ok(MeasureP1::new(CompactPart::new(atoms, density)?, tail))
    }

    pub fn from_measure(m: &MeasureP1) -> Self {
        SpecFile {
            atoms: m.compact().atoms().iter().map(|a| AtomSpec { x: a.location, w: a.weight }).collect(),
            compact_density: m
                .compact()
                .density()
                .map(|d| DensitySpec { grid: d.grid().to_vec(), values: d.values().to_vec() }),
            tail: TailSpec {
                cutoff: m.tail().cutoff(),
                inner_radius: m.tail().inner_radius(),
                coeffs: m.tail().coefficients().iter().map(|&(n, a)| CoeffSpec { n, a }).collect(),
            },
        }
    }
}

/// Reads and converts a spec file; parse failures are usage errors,
/// structural ones validation failures.
pub fn load(path: &Path) -> Result<MeasureP1, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let spec = SpecFile::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    spec.to_measure().map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

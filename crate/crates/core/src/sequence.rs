use alloc::vec::Vec;

use num_complex::Complex64;

use crate::cumulants::CumulantKind;

/// What a [`ComplexSequence`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    /// `m_0, m_1, …, m_N` (index 0 is the total mass).
    Moments,
    /// `K_1, …, K_N` of the given species.
    Cumulants(CumulantKind),
}

/// An indexed run of complex numbers: moments start at index 0, cumulants at
/// index 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSequence {
    values: Vec<Complex64>,
    kind: SequenceKind,
}

impl ComplexSequence {
    pub fn moments(values: Vec<Complex64>) -> Self {
        Self { values, kind: SequenceKind::Moments }
    }

    pub fn cumulants(kind: CumulantKind, k1_to_kn: Vec<Complex64>) -> Self {
        Self { values: k1_to_kn, kind: SequenceKind::Cumulants(kind) }
    }

    /// Moments `x^n` of the point mass at `x`.
    pub fn point_mass(x: Complex64, n_max: usize) -> Self {
        let mut values = Vec::with_capacity(n_max + 1);
        let mut p = Complex64::new(1.0, 0.0);
        for _ in 0..=n_max {
            values.push(p);
            p *= x;
        }
        Self::moments(values)
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn first_index(&self) -> usize {
        match self.kind {
            SequenceKind::Moments => 0,
            SequenceKind::Cumulants(_) => 1,
        }
    }

    /// Largest stored index; `None` for an empty sequence.
    pub fn n_max(&self) -> Option<usize> {
        (!self.values.is_empty()).then(|| self.first_index() + self.values.len() - 1)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entry with index `n`.
    pub fn get(&self, n: usize) -> Option<Complex64> {
        n.checked_sub(self.first_index()).and_then(|i| self.values.get(i).copied())
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// `(index, value)` pairs.
    pub fn indexed(&self) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        let start = self.first_index();
        self.values.iter().enumerate().map(move |(i, &v)| (i + start, v))
    }

    /// Entries up to and including index `n_max`.
    pub fn truncated(&self, n_max: usize) -> Self {
        let keep = (n_max + 1).saturating_sub(self.first_index()).min(self.values.len());
        Self { values: self.values[..keep].to_vec(), kind: self.kind }
    }

    /// Largest `|x_n - y_n|` over common indices.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.indexed()
            .filter_map(|(n, v)| other.get(n).map(|w| (v - w).norm()))
            .fold(0.0, f64::max)
    }
}

//! Complex moments and complex cumulants of probability measures whose
//! density is a convergent Laurent series `Σ a_n x^-n` outside a bounded
//! interval.
//!
//! Such measures usually have no ordinary moments. Their Stieltjes transform
//! continues analytically across `|z| > R` from the lower half-plane and
//! their Fourier transform continues from `t > 0` to an entire function; the
//! Laurent coefficients of the former and the Taylor coefficients of the
//! latter coincide, and are the *complex moments*. For the Cauchy law
//! `μ_{a,b}` they are `(a + ib)^n`.
//!
//! The crate is `no_std` with `alloc`:
//!
//! * [`measure`]: compact part plus Laurent tail, with validation.
//! * [`moments`]: closed-form contour moments and growth-rate estimates.
//! * [`partitions`]: set, non-crossing, interval and monotone partitions.
//! * [`cumulants`]: the four moment–cumulant formulae and their inversion.
//! * [`convolution`]: tensor, free, Boolean and monotone convolution of
//!   moment sequences.
//! * [`transforms`]: numeric and series Stieltjes/Fourier transforms.
//! * [`limits`]: scaled convolution powers converging to Cauchy laws.
//! * [`catalog`]: ready-made measures (split Cauchy laws and friends).
#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod convolution;
pub mod cumulants;
mod error;
pub mod limits;
pub mod measure;
pub mod moments;
pub mod partitions;
pub mod quadrature;
mod sequence;
pub mod transforms;

pub use num_complex::Complex64;

pub use cumulants::CumulantKind;
pub use error::{Error, Result};
pub use measure::{Atom, CompactPart, DensityTable, LaurentTail, MeasureP1, QuadratureRule};
pub use sequence::{ComplexSequence, SequenceKind};

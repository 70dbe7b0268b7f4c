use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid measure data: {0}")]
    InvalidMeasure(&'static str),

    #[error("density is undefined at atom location {location}")]
    AtAtom { location: f64 },

    #[error("order {requested} exceeds the supported maximum {limit}")]
    SizeLimit { requested: usize, limit: usize },

    #[error("sequence has {available} entries, {required} required")]
    TooShort { available: usize, required: usize },

    #[error("moment sequence must start with m_0 = 1, got {re}{im:+}i")]
    NotNormalized { re: f64, im: f64 },

    #[error("expected a {expected} sequence")]
    WrongSequenceKind { expected: &'static str },

    #[error("point {re}{im:+}i lies on the support or a pole of the transform")]
    Pole { re: f64, im: f64 },

    #[error("|z| = {modulus} is inside the divergence guard {guard} of the moment series")]
    Divergent { modulus: f64, guard: f64 },

    #[error("quadrature did not converge (error estimate {estimate:e})")]
    Quadrature { estimate: f64 },

    #[error("Stieltjes transform vanishes at {re}{im:+}i")]
    ZeroOfTransform { re: f64, im: f64 },

    #[error("Im m_1 = {im} is negative; not a moment sequence of a measure in the class")]
    NegativeImaginaryPart { im: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}
